#pragma once

#include <vector>

#include "stonekit/bool_algebra.hpp"

namespace stonekit {

// A filter on a finite Boolean algebra: contains 1, omits 0, closed under
// meet, upward closed.  members holds one bit per element index.
struct filter {
    algebra_ref algebra;
    std::vector<bool> members;
};

// In a finite algebra every ultrafilter is principal at an atom; the witness
// records which one.
struct ultrafilter {
    filter base;
    elem witness_atom;
};

// The three filter axioms (plus 1-in / 0-out), checked exhaustively.
// Shape problems (wrong mask length, missing algebra) raise ShapeMismatch;
// axiom failures just return false.
bool is_filter(const filter& F);

// Validating constructor: raises NotAFilter when the axioms fail.
filter filter_from_members(algebra_ref B, std::vector<bool> members);

// Smallest filter containing the seed: upward closure of the seed's meet.
// Empty seed gives the trivial filter {1}.  Raises NotProper when the seed
// meets to 0.
filter filter_generated(const algebra_ref& B, const std::vector<elem>& seed);

// The meet of all members; a filter is the up-set of this element.
elem filter_minimum(const filter& F);

// Decide property: for every a exactly one of a, -a is a member.
bool is_ultrafilter(const filter& F);

// The principal ultrafilter at the smallest-index atom below the filter's
// minimum (the finite, constructive shadow of the Zorn extension).
ultrafilter extend_to_ultrafilter(const filter& F);

// Principal ultrafilter at a given atom.
ultrafilter principal_ultrafilter(const algebra_ref& B, elem atom);

// All ultrafilters, in ascending atom order.
std::vector<ultrafilter> enumerate_ultrafilters(const algebra_ref& B);

// The bijection with homomorphisms to 2:  v_U(a) = 1 iff a in U,  and back
// U_v = v^{-1}(1).  hom_to_ultrafilter raises NotAHom when v is not a
// homomorphism onto the two-element algebra.
bool_hom ultrafilter_to_hom(const ultrafilter& U);
ultrafilter hom_to_ultrafilter(const bool_hom& v);

} // namespace stonekit
