#pragma once

#include "stonekit/bool_algebra.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace stonekit {

// A finite topological space, presented as the poset of its specialization
// order: the opens are exactly the up-closed subsets. Points are 0..size-1
// and subsets travel as bitmasks, so spaces are capped at 64 points; the
// algebra-building operations below tighten that to 16.
struct finite_poset {
    std::size_t size = 0;
    std::vector<std::uint64_t> above;
    std::vector<std::uint64_t> below;

    bool leq(std::size_t i, std::size_t j) const { return above[i] >> j & 1; }
    std::uint64_t all() const {
        return size >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
    }
};

finite_poset make_poset(std::size_t size, const std::vector<std::vector<bool>>& leq);
finite_poset discrete_poset(std::size_t size);
finite_poset chain_poset(std::size_t size);

// Every poset on up to 5 labeled points, deduplicated, in a deterministic
// order. The counts 1, 1, 3, 19, 219, 4231 give the test suites an oracle.
std::vector<finite_poset> all_posets(std::size_t size);

// A poset drawn by sprinkling relations over a random linear order and
// closing transitively, so any seed yields a valid instance.
finite_poset random_poset(std::size_t size, std::mt19937_64& rng);

bool is_open(const finite_poset& x, std::uint64_t a);
std::uint64_t closure(const finite_poset& x, std::uint64_t a);
std::uint64_t interior(const finite_poset& x, std::uint64_t a);

// interior of the closure; defined on opens only, where it is idempotent
// and inflationary.
std::uint64_t regularize(const finite_poset& x, std::uint64_t u);

// A Boolean algebra whose elements name subsets of a space: carrier[e] is
// the bitmask the element e stands for, in ascending mask order.
struct subset_algebra {
    algebra_ref algebra;
    std::vector<std::uint64_t> carrier;
};

// The regular opens, with meet = intersection, join = regularized union,
// and complement = interior of the set difference from the closure.
subset_algebra ro_algebra(const finite_poset& x);

// The simultaneously up- and down-closed subsets, under the plain set
// operations; always embedded in the regular opens.
subset_algebra clopens(const finite_poset& x);

// Closed forms for bounds of arbitrary finite families of regular opens:
// the infimum is the plain intersection, the supremum the regularized
// union. Either rejects a family member that is not regular open.
std::uint64_t ro_sup(const finite_poset& x, const std::vector<std::uint64_t>& family);
std::uint64_t ro_inf(const finite_poset& x, const std::vector<std::uint64_t>& family);

struct ed_report {
    bool ed = true;
    std::uint64_t witness = 0;
};

// A space is extremally disconnected when the closure of every open stays
// open. On failure, the witness is the first offending open in binary
// counting order over subset masks.
ed_report is_ED(const finite_poset& x);

} // namespace stonekit
