#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stonekit/profinite.hpp"

#include "support.hpp"

#include <random>

using namespace stonekit;
using testsupport::thrown_name;

namespace {

// Independent construction from an arbitrary big integer, reducing level by
// level. Lets the law tests range over the whole carrier, not just the part
// reachable from long long.
padic_int from_big(unsigned p, const big_int& z, std::size_t n) {
    padic_int x{p, {}};
    big_int pk = 1;
    for (std::size_t k = 0; k < n; ++k) {
        pk *= p;
        big_int r = z % pk;
        if (r < 0) r += pk;
        x.residues.push_back(r);
    }
    return x;
}

bool same_residues(const padic_int& a, const padic_int& b) {
    return a.p == b.p && a.residues == b.residues;
}

// Post-hoc invariant check: residues in range and coherent across levels.
bool is_compatible(const padic_int& x) {
    big_int pk = 1;
    for (std::size_t k = 0; k < x.precision(); ++k) {
        pk *= x.p;
        if (x.residues[k] < 0 || x.residues[k] >= pk) return false;
        if (k > 0 && x.residues[k] % (pk / x.p) != x.residues[k - 1]) return false;
    }
    return true;
}

big_int random_big(std::mt19937_64& rng) {
    big_int v = rng();
    v <<= 64;
    v += rng();
    if (rng() & 1) v = -v;
    return v;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

} // namespace

TEST_CASE("inverse system construction") {
    SUBCASE("constant system with identity transitions") {
        std::vector<std::size_t> id{0, 1, 2};
        auto sys = make_system({3, 3, 3}, {id, id});
        CHECK(sys.levels() == 3);
        CHECK(check_point(sys, {{1, 1, 1}}));
    }
    SUBCASE("residue chain carries the mod reductions") {
        auto sys = residue_chain(5, 3);
        CHECK(sys.sizes == std::vector<std::size_t>{5, 25, 125});
        for (std::size_t x = 0; x < 25; ++x) CHECK(sys.down[0][x] == x % 5);
        for (std::size_t x = 0; x < 125; ++x) CHECK(sys.down[1][x] == x % 25);
    }
    SUBCASE("rejections") {
        CHECK(thrown_name([] {
            make_system({2, 2}, {{0, 2}});
        }) == "IncompatibleTransitions");
        CHECK(thrown_name([] {
            make_system({2, 2}, {});
        }) == "IncompatibleTransitions");
        CHECK(thrown_name([] {
            make_system({2, 2}, {{0}});
        }) == "IncompatibleTransitions");
        CHECK(thrown_name([] { residue_chain(4, 2); }) == "NotPrime");
        CHECK(thrown_name([] { residue_chain(2, 0); }) == "PrecisionZero");
        CHECK(thrown_name([] { residue_chain(2, 17); }) == "SizeLimit");
    }
}

TEST_CASE("composite transitions") {
    SUBCASE("on the residue chain, skipping a level is still reduction") {
        auto sys = residue_chain(5, 3);
        auto t31 = composite(sys, 3, 1);
        for (std::size_t x = 0; x < 125; ++x) CHECK(t31[x] == x % 5);
        auto t22 = composite(sys, 2, 2);
        for (std::size_t x = 0; x < 25; ++x) CHECK(t22[x] == x);
    }
    SUBCASE("cocycle law on random systems") {
        std::mt19937_64 rng(0xc0cc1eu);
        for (int iter = 0; iter < 50; ++iter) {
            std::uniform_int_distribution<std::size_t> small(1, 6);
            const std::size_t levels = small(rng);
            std::vector<std::size_t> sizes(levels);
            for (auto& s : sizes) s = small(rng);
            std::vector<std::vector<std::size_t>> trans(levels - 1);
            for (std::size_t i = 0; i + 1 < levels; ++i) {
                trans[i].resize(sizes[i + 1]);
                std::uniform_int_distribution<std::size_t> pick(0, sizes[i] - 1);
                for (auto& v : trans[i]) v = pick(rng);
            }
            auto sys = make_system(sizes, trans);
            for (std::size_t i = 1; i <= levels; ++i)
                for (std::size_t j = i; j <= levels; ++j)
                    for (std::size_t k = j; k <= levels; ++k) {
                        auto kj = composite(sys, k, j);
                        auto ji = composite(sys, j, i);
                        auto ki = composite(sys, k, i);
                        for (std::size_t x = 0; x < kj.size(); ++x)
                            CHECK(ki[x] == ji[kj[x]]);
                    }
        }
    }
    SUBCASE("bad level indices") {
        auto sys = residue_chain(2, 3);
        CHECK(thrown_name([&] { composite(sys, 2, 3); }) == "ShapeMismatch");
        CHECK(thrown_name([&] { composite(sys, 4, 1); }) == "ShapeMismatch");
        CHECK(thrown_name([&] { composite(sys, 1, 0); }) == "ShapeMismatch");
    }
}

TEST_CASE("limit point compatibility") {
    auto sys = residue_chain(5, 3);
    SUBCASE("projections of one integer are always compatible") {
        for (long long z : {0LL, 1LL, 93LL, 124LL}) {
            limit_point pt{{static_cast<std::size_t>(z % 5),
                            static_cast<std::size_t>(z % 25),
                            static_cast<std::size_t>(z % 125)}};
            CHECK(check_point(sys, pt));
        }
    }
    SUBCASE("the tower of p^k - 1") {
        limit_point pt{{4, 24, 124}};
        CHECK(check_point(sys, pt));
        std::size_t pk = 1;
        for (std::size_t k = 0; k < 3; ++k) {
            pk *= 5;
            CHECK(pt.coords[k] == pk - 1);
        }
    }
    SUBCASE("an incoherent tuple is rejected as a point, quietly") {
        CHECK(!check_point(sys, {{1, 2, 2}}));
    }
    SUBCASE("malformed tuples are loud") {
        CHECK(thrown_name([&] { check_point(sys, {{1, 1}}); }) == "ShapeMismatch");
        CHECK(thrown_name([&] {
            check_point(sys, {{5, 0, 0}});
        }) == "ShapeMismatch");
    }
}

TEST_CASE("integers land in the p-adics") {
    SUBCASE("minus one is the all-ones tower") {
        auto x = padic_from_int(5, -1, 3);
        CHECK(x.residues == std::vector<big_int>{4, 24, 124});
    }
    SUBCASE("thirteen over the prime 2") {
        auto x = padic_from_int(2, 13, 4);
        CHECK(x.residues == std::vector<big_int>{1, 1, 5, 13});
    }
    SUBCASE("rejections") {
        CHECK(thrown_name([] { padic_from_int(4, 1, 2); }) == "NotPrime");
        CHECK(thrown_name([] { padic_from_int(1, 1, 2); }) == "NotPrime");
        CHECK(thrown_name([] { padic_from_int(0, 1, 2); }) == "NotPrime");
        CHECK(thrown_name([] { padic_from_int(5, 1, 0); }) == "PrecisionZero");
    }
    SUBCASE("every embedding is coherent across levels") {
        std::mt19937_64 rng(0xe4bedu);
        std::uniform_int_distribution<long long> zs(-1000000, 1000000);
        for (unsigned p : {2u, 3u, 5u, 7u})
            for (int iter = 0; iter < 50; ++iter)
                CHECK(is_compatible(padic_from_int(p, zs(rng), 20)));
    }
}

TEST_CASE("p-adic ring arithmetic") {
    SUBCASE("two plus three is zero at the bottom of the 5-adics") {
        auto s = padic_add(padic_from_int(5, 2, 2), padic_from_int(5, 3, 2));
        CHECK(s.residues == std::vector<big_int>{0, 5});
    }
    SUBCASE("binary operations truncate to the smaller precision") {
        auto x = padic_from_int(3, 10, 5);
        auto y = padic_from_int(3, 4, 3);
        CHECK(padic_add(x, y).precision() == 3);
        CHECK(padic_mul(y, x).precision() == 3);
    }
    SUBCASE("operands over different primes are rejected") {
        auto x = padic_from_int(3, 1, 2);
        auto y = padic_from_int(5, 1, 2);
        CHECK(thrown_name([&] { padic_add(x, y); }) == "PrimeMismatch");
        CHECK(thrown_name([&] { padic_mul(x, y); }) == "PrimeMismatch");
    }
    SUBCASE("arithmetic agrees with exact integer arithmetic, reduced") {
        std::mt19937_64 rng(0x0aac1eu);
        for (unsigned p : {2u, 3u, 5u}) {
            for (int iter = 0; iter < 40; ++iter) {
                const std::size_t n = 1 + static_cast<std::size_t>(rng() % 64);
                big_int a = random_big(rng), b = random_big(rng);
                auto xa = from_big(p, a, n), xb = from_big(p, b, n);
                CHECK(same_residues(padic_add(xa, xb), from_big(p, a + b, n)));
                CHECK(same_residues(padic_mul(xa, xb), from_big(p, a * b, n)));
                CHECK(same_residues(padic_neg(xa), from_big(p, -a, n)));
            }
        }
    }
    SUBCASE("ring laws at mixed precisions") {
        std::mt19937_64 rng(0x1a35u);
        for (unsigned p : {2u, 3u, 5u}) {
            for (int iter = 0; iter < 30; ++iter) {
                auto rand_prec = [&] { return 1 + static_cast<std::size_t>(rng() % 64); };
                auto x = from_big(p, random_big(rng), rand_prec());
                auto y = from_big(p, random_big(rng), rand_prec());
                auto z = from_big(p, random_big(rng), rand_prec());
                CHECK(same_residues(padic_add(x, y), padic_add(y, x)));
                CHECK(same_residues(padic_mul(x, y), padic_mul(y, x)));
                CHECK(same_residues(padic_add(padic_add(x, y), z),
                                    padic_add(x, padic_add(y, z))));
                CHECK(same_residues(padic_mul(padic_mul(x, y), z),
                                    padic_mul(x, padic_mul(y, z))));
                CHECK(same_residues(padic_mul(x, padic_add(y, z)),
                                    padic_add(padic_mul(x, y), padic_mul(x, z))));
                const std::size_t n = x.precision();
                CHECK(same_residues(padic_mul(x, padic_from_int(p, 1, n)), x));
                CHECK(same_residues(padic_add(x, padic_from_int(p, 0, n)), x));
                CHECK(same_residues(padic_add(x, padic_neg(x)), padic_from_int(p, 0, n)));
                for (const auto* v : {&x, &y, &z}) CHECK(is_compatible(*v));
                CHECK(is_compatible(padic_mul(x, y)));
                CHECK(is_compatible(padic_add(x, y)));
                CHECK(is_compatible(padic_neg(x)));
            }
        }
    }
}

TEST_CASE("digit sequences over the prime 2") {
    SUBCASE("thirteen reads off as 1011") {
        CHECK(cantor_digits(padic_from_int(2, 13, 4)) == std::vector<int>{1, 0, 1, 1});
    }
    SUBCASE("all-zero digits build the zero element") {
        auto z = digits_to_padic({0, 0, 0});
        CHECK(z.residues == std::vector<big_int>{0, 0, 0});
        CHECK(same_residues(z, padic_from_int(2, 0, 3)));
    }
    SUBCASE("round trips in both directions at precision 32") {
        std::mt19937_64 rng(0xca4704u);
        for (int iter = 0; iter < 100; ++iter) {
            auto x = from_big(2, random_big(rng), 32);
            CHECK(same_residues(digits_to_padic(cantor_digits(x)), x));
            std::vector<int> bits(32);
            for (auto& b : bits) b = static_cast<int>(rng() & 1);
            CHECK(cantor_digits(digits_to_padic(bits)) == bits);
        }
    }
    SUBCASE("rejections") {
        CHECK(thrown_name([] {
            cantor_digits(padic_from_int(3, 1, 2));
        }) == "WrongPrime");
        CHECK(thrown_name([] { digits_to_padic({}); }) == "PrecisionZero");
        CHECK(thrown_name([] { digits_to_padic({0, 2}); }) == "ShapeMismatch");
    }
}

TEST_CASE("truncated profinite integers") {
    SUBCASE("seven over the divisors of twelve") {
        auto e = zhat_from_int(7, {1, 2, 3, 4, 6, 12});
        CHECK(zhat_reduce(e, 1) == 0);
        CHECK(zhat_reduce(e, 2) == 1);
        CHECK(zhat_reduce(e, 3) == 1);
        CHECK(zhat_reduce(e, 4) == 3);
        CHECK(zhat_reduce(e, 6) == 1);
        CHECK(zhat_reduce(e, 12) == 7);
    }
    SUBCASE("zero reduces to zero everywhere") {
        auto e = zhat_from_int(0, {1, 2, 3, 4, 6, 12});
        for (auto [n, r] : e.residues) {
            (void)n;
            CHECK(r == 0);
        }
    }
    SUBCASE("negative integers use the nonnegative residue") {
        auto e = zhat_from_int(-1, {1, 2, 4});
        CHECK(zhat_reduce(e, 4) == 3);
        CHECK(zhat_reduce(e, 2) == 1);
        CHECK(zhat_reduce(e, 1) == 0);
    }
    SUBCASE("moduli sets must list every divisor") {
        CHECK(thrown_name([] { zhat_from_int(1, {2, 4}); }) == "ModuliNotClosed");
        CHECK(thrown_name([] { zhat_from_int(1, {1, 2, 4, 12}); }) == "ModuliNotClosed");
        CHECK(thrown_name([] { zhat_from_int(1, {0, 1}); }) == "ShapeMismatch");
        CHECK(thrown_name([] {
            zhat_reduce(zhat_from_int(1, {1, 2}), 3);
        }) == "ShapeMismatch");
    }
    SUBCASE("every residue at every level up to 50 is hit by an integer") {
        for (std::uint64_t n = 1; n <= 50; ++n) {
            auto mods = divisors(n);
            for (std::uint64_t r = 0; r < n; ++r)
                CHECK(zhat_reduce(zhat_from_int(static_cast<long long>(r), mods), n) == r);
        }
    }
    SUBCASE("divisibility compatibility on random closed moduli sets") {
        std::mt19937_64 rng(0x2a47u);
        std::uniform_int_distribution<std::uint64_t> pick(1, 200);
        std::uniform_int_distribution<long long> zs(-1000000, 1000000);
        for (int iter = 0; iter < 60; ++iter) {
            std::set<std::uint64_t> closed;
            for (int j = 0; j < 3; ++j)
                for (auto d : divisors(pick(rng))) closed.insert(d);
            auto e = zhat_from_int(zs(rng),
                                   std::vector<std::uint64_t>(closed.begin(), closed.end()));
            for (auto [n, xn] : e.residues)
                for (auto [m, xm] : e.residues)
                    if (n % m == 0) CHECK(xn % m == xm);
        }
    }
}
