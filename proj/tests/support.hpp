#pragma once

// Shared test helpers: deterministic generators and the independent oracles
// the expected values in the test files were computed with.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "stonekit/bool_algebra.hpp"
#include "stonekit/errors.hpp"

namespace testsupport {

using stonekit::algebra_ref;
using stonekit::elem;
using stonekit::raw_tables;

// Runs f and reports the stonekit error name it throws ("" if none).
template <typename F>
std::string thrown_name(F&& f) {
    try {
        f();
    } catch (const stonekit::domain_error& e) {
        return e.name();
    }
    return "";
}

// Number of distinct prime factors, by trial division.
inline unsigned omega(long long n) {
    unsigned count = 0;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ++count;
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ++count;
    return count;
}

struct labeled_algebra {
    algebra_ref algebra;
    std::vector<elem> of_mask;  // powerset bitmask -> element index
};

// A uniformly relabeled powerset on `atoms` atoms, run through the validator.
// Up to isomorphism every finite Boolean algebra arises this way, so these are
// the "random algebra" instances of the property suites.
inline labeled_algebra relabeled_powerset(unsigned atoms, std::mt19937_64& rng) {
    const std::size_t n = std::size_t{1} << atoms;
    std::vector<elem> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);

    raw_tables t;
    t.size = n;
    t.zero = perm[0];
    t.one = perm[n - 1];
    t.meet.resize(n * n);
    t.join.resize(n * n);
    t.neg.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            t.meet[std::size_t{perm[a]} * n + perm[b]] = perm[a & b];
            t.join[std::size_t{perm[a]} * n + perm[b]] = perm[a | b];
        }
        t.neg[perm[a]] = perm[(n - 1) ^ a];
    }
    return {stonekit::validate_algebra(t), std::move(perm)};
}

// Independent re-derivation of the validator's certification scan:
// commutativity, associativity, absorption, distributivity, complement,
// bounds; lexicographic witnesses; meet form before join form per step.
inline std::optional<std::pair<std::string, std::vector<std::size_t>>>
first_violation(const raw_tables& t) {
    const std::size_t n = t.size;
    auto mt = [&](std::size_t a, std::size_t b) -> std::size_t { return t.meet[a * n + b]; };
    auto jn = [&](std::size_t a, std::size_t b) -> std::size_t { return t.join[a * n + b]; };
    using hit = std::pair<std::string, std::vector<std::size_t>>;

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (mt(a, b) != mt(b, a) || jn(a, b) != jn(b, a))
                return hit{"commutativity", {a, b}};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (mt(mt(a, b), c) != mt(a, mt(b, c)) || jn(jn(a, b), c) != jn(a, jn(b, c)))
                    return hit{"associativity", {a, b, c}};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (mt(a, jn(a, b)) != a || jn(a, mt(a, b)) != a)
                return hit{"absorption", {a, b}};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (mt(a, jn(b, c)) != jn(mt(a, b), mt(a, c)) ||
                    jn(a, mt(b, c)) != mt(jn(a, b), jn(a, c)))
                    return hit{"distributivity", {a, b, c}};
    for (std::size_t a = 0; a < n; ++a)
        if (mt(a, t.neg[a]) != t.zero || jn(a, t.neg[a]) != t.one)
            return hit{"complement", {a}};
    for (std::size_t a = 0; a < n; ++a)
        if (mt(a, t.zero) != t.zero || jn(a, t.zero) != a ||
            mt(a, t.one) != a || jn(a, t.one) != t.one)
            return hit{"bounds", {a}};
    return std::nullopt;
}

// The five-element lattice N5 (0 < a < c < 1, 0 < b < 1, b incomparable to
// a and c) with the complement assignment -a = b, -b = a, -c = b.  A lattice,
// but not distributive; the canonical invalid input.
inline raw_tables n5_tables() {
    // indices: 0 = bottom, 1 = a, 2 = b, 3 = c, 4 = top
    raw_tables t;
    t.size = 5;
    t.zero = 0;
    t.one = 4;
    t.meet = {0, 0, 0, 0, 0,
              0, 1, 0, 1, 1,
              0, 0, 2, 0, 2,
              0, 1, 0, 3, 3,
              0, 1, 2, 3, 4};
    t.join = {0, 1, 2, 3, 4,
              1, 1, 4, 3, 4,
              2, 4, 2, 4, 4,
              3, 3, 4, 3, 4,
              4, 4, 4, 4, 4};
    t.neg = {4, 2, 1, 2, 0};
    return t;
}

} // namespace testsupport
