#pragma once

#include "stonekit/bool_algebra.hpp"
#include "stonekit/profinite.hpp"

#include <cstdint>
#include <vector>

namespace stonekit {

// A clopen subset of the p-adic integers: a finite union of balls, stored
// as the residues it covers at a single level. Values are kept at the
// coarsest level that describes the set, so structural equality decides
// set equality. At level 0 only {} (empty) and {0} (everything) remain.
struct zp_clopen {
    unsigned p = 2;
    unsigned level = 0;
    std::vector<std::uint32_t> members;

    friend bool operator==(const zp_clopen&, const zp_clopen&) = default;
};

// Canonical form of the set of residues mod p^level: peels off every level
// whose fibers are all complete. Carriers are capped at 2^16 residues.
zp_clopen normalize(unsigned p, unsigned level, std::vector<std::uint32_t> members);

// The Boolean structure: lift both operands to the finer of the two levels
// by expanding residues into their fibers, combine, and renormalize.
zp_clopen clopen_union(const zp_clopen& a, const zp_clopen& b);
zp_clopen clopen_intersection(const zp_clopen& a, const zp_clopen& b);
zp_clopen clopen_complement(const zp_clopen& a);

// True iff x lies in a, decided at level(a); the point must carry at least
// that many residues, otherwise InsufficientPrecision asks for a deeper x.
bool clopen_member(const padic_int& x, const zp_clopen& a);

// One finite quotient of the tower: the p^n balls of radius p^-n, whose
// subsets form a powerset algebra. The algebra is materialized on demand
// and only within the 16-atom bound of the core; the granule operator
// below works on ball containment alone and reaches much further.
struct level_algebra {
    unsigned p = 2;
    unsigned level = 0;
    std::uint32_t ball_count = 1;

    algebra_ref algebra() const;
};

level_algebra make_level_algebra(unsigned p, unsigned n);

// The hom dual to the reduction map between consecutive quotients: a set
// of balls at level n maps to its preimage among the level n+1 balls.
bool_hom level_inclusion(unsigned p, unsigned n);

// Union of the level-n balls of b0 wholly contained in e; never grows e,
// and recovers e exactly once n reaches level(e).
zp_clopen granule_operator(const level_algebra& b0, const zp_clopen& e);

} // namespace stonekit
