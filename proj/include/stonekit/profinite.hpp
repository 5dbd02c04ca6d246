#pragma once

#include "stonekit/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace stonekit {

using big_int = boost::multiprecision::cpp_int;

bool is_prime(unsigned long long n);

// ------------------------------------------------------------------
// inverse systems over a finite chain of levels
// ------------------------------------------------------------------

// Levels are indexed 1..N. Level k carries the set {0, ..., sizes[k-1]-1},
// and down[k-1] maps level k+1 onto level k. Longer descents are composites
// of the adjacent maps, so the usual coherence equations hold by build.
struct inverse_system {
    std::vector<std::size_t> sizes;
    std::vector<std::vector<std::size_t>> down;

    std::size_t levels() const { return sizes.size(); }
};

inverse_system make_system(std::vector<std::size_t> sizes,
                           std::vector<std::vector<std::size_t>> transitions);

// The chain Z/p <- Z/p^2 <- ... <- Z/p^depth with reduction maps. The
// carriers are materialized, so p^depth is capped at 2^16.
inverse_system residue_chain(unsigned p, unsigned depth);

// Table of the composite map from level k down to level i (both 1-based).
std::vector<std::size_t> composite(const inverse_system& sys,
                                   std::size_t k, std::size_t i);

// A candidate point of the inverse limit: one coordinate per level.
struct limit_point {
    std::vector<std::size_t> coords;
};

// True iff every adjacent transition carries coords[k] to coords[k-1].
bool check_point(const inverse_system& sys, const limit_point& pt);

// ------------------------------------------------------------------
// p-adic integers at finite precision
// ------------------------------------------------------------------

// residues[k] is the value mod p^(k+1); consecutive residues agree modulo
// the smaller power. Exact at any precision, so residues are big integers.
struct padic_int {
    unsigned p = 0;
    std::vector<big_int> residues;

    std::size_t precision() const { return residues.size(); }
};

padic_int padic_from_int(unsigned p, long long z, std::size_t n);

// Coordinatewise ring operations. Binary ops take operands over the same
// prime and truncate to the smaller precision, mirroring the projections.
padic_int padic_add(const padic_int& x, const padic_int& y);
padic_int padic_mul(const padic_int& x, const padic_int& y);
padic_int padic_neg(const padic_int& x);

// The 2-adic/Cantor dictionary: bits a_0..a_{n-1} with the level-k residue
// equal to the partial sum of a_i 2^i over i < k. Mutually inverse at equal
// precision.
std::vector<int> cantor_digits(const padic_int& x);
padic_int digits_to_padic(const std::vector<int>& bits);

// ------------------------------------------------------------------
// the profinite completion of the integers, truncated
// ------------------------------------------------------------------

// Tracks one residue per modulus over a divisibility-closed finite set of
// moduli, so that m | n forces agreement of the two residues mod m.
struct zhat_element {
    std::map<std::uint64_t, std::uint64_t> residues;
};

zhat_element zhat_from_int(long long z, const std::vector<std::uint64_t>& moduli);
std::uint64_t zhat_reduce(const zhat_element& e, std::uint64_t n);

} // namespace stonekit
