#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stonekit/filters.hpp"

namespace stonekit {

// Subsets of a finite space as bitmasks over point indices.  Spaces here
// never exceed 16 points: an algebra capped at 2^16 elements has at most 16
// ultrafilters, and clop() materializes a powerset algebra.
using point_mask = std::uint32_t;

// A finite discrete space: just its point labels.
struct finite_space {
    std::vector<std::string> points;
};

// Checks labels are distinct.
finite_space make_space(std::vector<std::string> labels);

// Labels "0".."n-1".
finite_space discrete_space(std::size_t n);

// The Stone space of a finite algebra: all its ultrafilters, in atom order.
// Finite Stone spaces are discrete, so the points are the whole structure.
struct stone_space {
    algebra_ref algebra;
    std::vector<ultrafilter> points;
};

stone_space make_stone_space(const algebra_ref& B);

// A map between finite discrete spaces; every total assignment is continuous.
// Only the sizes of the two spaces matter for the bookkeeping here.
struct continuous_map {
    std::size_t source_size = 0;
    std::size_t target_size = 0;
    std::vector<std::uint32_t> assignment;  // source point -> target point
};

continuous_map make_map(std::size_t source_size, std::size_t target_size,
                        std::vector<std::uint32_t> assignment);
continuous_map identity_map(std::size_t n);
continuous_map compose_maps(const continuous_map& g, const continuous_map& f);

// A clopen subset of a finite space (every subset qualifies).
struct clopen_set {
    std::size_t space_size = 0;
    point_mask members = 0;
};

// hat(a): the ultrafilters containing a, as a clopen of X_B.
clopen_set hat(const stone_space& X, std::size_t a);

// The clopen algebra of a finite discrete space: the powerset algebra with
// element index == point mask.  Empty spaces are rejected (their algebra
// would be one-element), spaces past 16 points exceed the table cap.
algebra_ref clop(const finite_space& X);

// eta_B: B -> clop(X_B), a |-> hat(a).  The Stone representation; a bijective
// homomorphism for every valid B (tested, not assumed).
bool_hom eta(const algebra_ref& B);

// phi_X: X -> stone_space(clop(X)), x |-> U_x = {C : x in C}.
continuous_map phi(const finite_space& X);

// The contravariant functors on morphisms:
//   dual_map(phi: B -> C) = phi^*: X_C -> X_B,  U |-> phi^{-1}(U)
//   clop_pullback(f: X -> Y) = f^{-1}: clop(Y) -> clop(X)
continuous_map dual_map(const bool_hom& phi);
bool_hom clop_pullback(const continuous_map& f);

struct check_report {
    bool ok = true;
    std::string witness;  // empty when ok
};

// Naturality of eta: for all a in B,  (phi^*)^{-1}(hat_B(a)) = hat_C(phi(a)).
// The hom overload also checks the phi square of the dualized map; the map
// overload checks   S(C(f)) . phi_X = phi_Y . f   pointwise.
check_report naturality_check(const bool_hom& phi);
check_report naturality_check(const continuous_map& f);

// Finite Stone-Cech: beta(S) = stone_space(clop(S)) with unit phi(S); the
// unit is a bijection because every ultrafilter on a finite set is principal.
struct beta_result {
    stone_space space;
    continuous_map unit;
};

beta_result beta_finite(const finite_space& S);

// Finite Gleason lifting: given f: X ->> Y and g: P -> Y, the map
// h(p) = lowest-index preimage of g(p), so that f . h = g.
continuous_map gleason_lift(const continuous_map& f, const continuous_map& g);

} // namespace stonekit
