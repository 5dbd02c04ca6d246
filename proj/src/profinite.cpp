#include "stonekit/profinite.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace stonekit {

bool is_prime(unsigned long long n) {
    if (n < 2) return false;
    for (unsigned long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ------------------------------------------------------------------
// inverse systems
// ------------------------------------------------------------------

inverse_system make_system(std::vector<std::size_t> sizes,
                           std::vector<std::vector<std::size_t>> transitions) {
    const std::size_t expected = sizes.empty() ? 0 : sizes.size() - 1;
    if (transitions.size() != expected)
        raise("IncompatibleTransitions",
              "expected " + std::to_string(expected) + " transition tables, got " +
                  std::to_string(transitions.size()));
    for (std::size_t i = 0; i < transitions.size(); ++i) {
        if (transitions[i].size() != sizes[i + 1])
            raise("IncompatibleTransitions",
                  "table " + std::to_string(i + 1) + " must map a carrier of size " +
                      std::to_string(sizes[i + 1]) + ", has " +
                      std::to_string(transitions[i].size()) + " entries");
        for (std::size_t x = 0; x < transitions[i].size(); ++x)
            if (transitions[i][x] >= sizes[i])
                raise("IncompatibleTransitions",
                      "table " + std::to_string(i + 1) + " sends " + std::to_string(x) +
                          " outside the lower carrier");
    }
    return {std::move(sizes), std::move(transitions)};
}

inverse_system residue_chain(unsigned p, unsigned depth) {
    if (!is_prime(p))
        raise("NotPrime", std::to_string(p) + " is not prime");
    if (depth == 0)
        raise("PrecisionZero", "a residue chain needs at least one level");

    std::vector<std::size_t> sizes;
    sizes.reserve(depth);
    std::size_t pk = 1;
    for (unsigned k = 0; k < depth; ++k) {
        if (pk > (std::size_t{1} << 16) / p)
            raise("SizeLimit", "carrier " + std::to_string(p) + "^" +
                                   std::to_string(k + 1) + " exceeds 2^16");
        pk *= p;
        sizes.push_back(pk);
    }

    std::vector<std::vector<std::size_t>> down(depth >= 1 ? depth - 1 : 0);
    for (std::size_t i = 0; i + 1 < depth; ++i) {
        down[i].resize(sizes[i + 1]);
        for (std::size_t x = 0; x < sizes[i + 1]; ++x) down[i][x] = x % sizes[i];
    }
    return {std::move(sizes), std::move(down)};
}

std::vector<std::size_t> composite(const inverse_system& sys,
                                   std::size_t k, std::size_t i) {
    if (i < 1 || k < i || k > sys.levels())
        raise("ShapeMismatch", "composite requires 1 <= i <= k <= " +
                                   std::to_string(sys.levels()));
    std::vector<std::size_t> table(sys.sizes[k - 1]);
    for (std::size_t x = 0; x < table.size(); ++x) table[x] = x;
    for (std::size_t level = k; level > i; --level)
        for (auto& v : table) v = sys.down[level - 2][v];
    return table;
}

bool check_point(const inverse_system& sys, const limit_point& pt) {
    if (pt.coords.size() != sys.levels())
        raise("ShapeMismatch", "point has " + std::to_string(pt.coords.size()) +
                                   " coordinates for " + std::to_string(sys.levels()) +
                                   " levels");
    for (std::size_t i = 0; i < pt.coords.size(); ++i)
        if (pt.coords[i] >= sys.sizes[i])
            raise("ShapeMismatch",
                  "coordinate at level " + std::to_string(i + 1) + " is out of range");
    for (std::size_t i = 0; i + 1 < pt.coords.size(); ++i)
        if (sys.down[i][pt.coords[i + 1]] != pt.coords[i]) return false;
    return true;
}

// ------------------------------------------------------------------
// p-adic integers
// ------------------------------------------------------------------

namespace {

big_int mod_floor(const big_int& z, const big_int& m) {
    big_int r = z % m;
    if (r < 0) r += m;
    return r;
}

template <typename F>
padic_int zip_residues(const padic_int& x, const padic_int& y, F&& combine) {
    if (x.p != y.p)
        raise("PrimeMismatch", "operands live over different primes");
    const std::size_t n = std::min(x.precision(), y.precision());
    if (n == 0)
        raise("PrecisionZero", "operands must carry at least one residue");
    padic_int out{x.p, {}};
    out.residues.reserve(n);
    big_int pk = 1;
    for (std::size_t k = 0; k < n; ++k) {
        pk *= x.p;
        out.residues.push_back(mod_floor(combine(x.residues[k], y.residues[k]), pk));
    }
    return out;
}

} // namespace

padic_int padic_from_int(unsigned p, long long z, std::size_t n) {
    if (!is_prime(p))
        raise("NotPrime", std::to_string(p) + " is not prime");
    if (n == 0)
        raise("PrecisionZero", "precision must be at least 1");
    padic_int x{p, {}};
    x.residues.reserve(n);
    const big_int zz = z;
    big_int pk = 1;
    for (std::size_t k = 0; k < n; ++k) {
        pk *= p;
        x.residues.push_back(mod_floor(zz, pk));
    }
    return x;
}

padic_int padic_add(const padic_int& x, const padic_int& y) {
    return zip_residues(x, y, [](const big_int& a, const big_int& b) { return a + b; });
}

padic_int padic_mul(const padic_int& x, const padic_int& y) {
    return zip_residues(x, y, [](const big_int& a, const big_int& b) { return a * b; });
}

padic_int padic_neg(const padic_int& x) {
    if (x.precision() == 0)
        raise("PrecisionZero", "operand must carry at least one residue");
    padic_int out{x.p, {}};
    out.residues.reserve(x.precision());
    big_int pk = 1;
    for (std::size_t k = 0; k < x.precision(); ++k) {
        pk *= x.p;
        out.residues.push_back(mod_floor(-x.residues[k], pk));
    }
    return out;
}

std::vector<int> cantor_digits(const padic_int& x) {
    if (x.p != 2)
        raise("WrongPrime", "digit sequences are read off over the prime 2");
    if (x.precision() == 0)
        raise("PrecisionZero", "operand must carry at least one residue");
    // The deepest residue already encodes every shallower one.
    const big_int& deep = x.residues.back();
    std::vector<int> bits(x.precision());
    for (std::size_t i = 0; i < bits.size(); ++i)
        bits[i] = boost::multiprecision::bit_test(deep, static_cast<unsigned>(i)) ? 1 : 0;
    return bits;
}

padic_int digits_to_padic(const std::vector<int>& bits) {
    if (bits.empty())
        raise("PrecisionZero", "at least one digit is needed");
    padic_int x{2, {}};
    x.residues.reserve(bits.size());
    big_int acc = 0;
    big_int pw = 1;
    for (int b : bits) {
        if (b != 0 && b != 1)
            raise("ShapeMismatch", "digits must be 0 or 1");
        acc += pw * b;
        pw *= 2;
        x.residues.push_back(acc);
    }
    return x;
}

// ------------------------------------------------------------------
// truncated profinite completion of the integers
// ------------------------------------------------------------------

zhat_element zhat_from_int(long long z, const std::vector<std::uint64_t>& moduli) {
    std::set<std::uint64_t> listed(moduli.begin(), moduli.end());
    for (auto n : listed) {
        if (n == 0)
            raise("ShapeMismatch", "moduli must be at least 1");
        for (std::uint64_t d = 1; d * d <= n; ++d) {
            if (n % d != 0) continue;
            for (std::uint64_t div : {d, n / d})
                if (!listed.count(div))
                    raise("ModuliNotClosed", "modulus " + std::to_string(n) +
                                                 " is listed but its divisor " +
                                                 std::to_string(div) + " is missing");
        }
    }
    zhat_element e;
    const big_int zz = z;
    for (auto n : listed)
        e.residues[n] = static_cast<std::uint64_t>(mod_floor(zz, big_int(n)));
    return e;
}

std::uint64_t zhat_reduce(const zhat_element& e, std::uint64_t n) {
    auto it = e.residues.find(n);
    if (it == e.residues.end())
        raise("ShapeMismatch",
              "modulus " + std::to_string(n) + " is not tracked by this element");
    return it->second;
}

} // namespace stonekit
