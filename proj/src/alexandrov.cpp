#include "stonekit/alexandrov.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace stonekit {

namespace {

finite_poset from_relation(std::size_t size, const std::vector<std::uint64_t>& rows) {
    finite_poset x;
    x.size = size;
    x.above = rows;
    x.below.assign(size, 0);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            if (rows[i] >> j & 1) x.below[j] |= std::uint64_t{1} << i;
    return x;
}

void check_mask(const finite_poset& x, std::uint64_t a) {
    if (a & ~x.all())
        raise("ShapeMismatch", "subset mask mentions points outside the space");
}

// Reachability closure of the relation rows, in place.
void transitive_close(std::vector<std::uint64_t>& rows) {
    for (std::size_t k = 0; k < rows.size(); ++k)
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i] >> k & 1) rows[i] |= rows[k];
}

bool antisymmetric(const std::vector<std::uint64_t>& rows) {
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if ((rows[i] >> j & 1) && (rows[j] >> i & 1)) return false;
    return true;
}

subset_algebra algebra_from_carrier(const finite_poset& x,
                                    std::vector<std::uint64_t> carrier,
                                    std::uint64_t (*join_of)(const finite_poset&,
                                                             std::uint64_t, std::uint64_t),
                                    std::uint64_t (*neg_of)(const finite_poset&,
                                                            std::uint64_t)) {
    std::vector<std::int32_t> index(std::size_t{1} << x.size, -1);
    for (std::size_t e = 0; e < carrier.size(); ++e)
        index[carrier[e]] = static_cast<std::int32_t>(e);
    auto locate = [&](std::uint64_t mask) {
        if (index[mask] < 0)
            raise("NotRegularOpen", "operation left the carrier of the algebra");
        return static_cast<elem>(index[mask]);
    };

    raw_tables t;
    t.size = carrier.size();
    t.zero = 0;
    t.one = static_cast<elem>(carrier.size() - 1);
    t.meet.resize(t.size * t.size);
    t.join.resize(t.size * t.size);
    t.neg.resize(t.size);
    for (std::size_t a = 0; a < t.size; ++a) {
        for (std::size_t b = 0; b < t.size; ++b) {
            t.meet[a * t.size + b] = locate(carrier[a] & carrier[b]);
            t.join[a * t.size + b] = locate(join_of(x, carrier[a], carrier[b]));
        }
        t.neg[a] = locate(neg_of(x, carrier[a]));
    }
    return {validate_algebra(t), std::move(carrier)};
}

bool is_regular_open(const finite_poset& x, std::uint64_t u) {
    return is_open(x, u) && regularize(x, u) == u;
}

} // namespace

finite_poset make_poset(std::size_t size, const std::vector<std::vector<bool>>& leq) {
    if (size > 64)
        raise("SizeLimit", "posets are capped at 64 points");
    if (leq.size() != size)
        raise("ShapeMismatch", "relation has " + std::to_string(leq.size()) +
                                   " rows for " + std::to_string(size) + " points");
    for (const auto& row : leq)
        if (row.size() != size)
            raise("ShapeMismatch", "relation rows must have one entry per point");

    for (std::size_t i = 0; i < size; ++i)
        if (!leq[i][i])
            raise("NotAPoset", "point " + std::to_string(i) + " is not below itself");
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i + 1; j < size; ++j)
            if (leq[i][j] && leq[j][i])
                raise("NotAPoset", "points " + std::to_string(i) + " and " +
                                       std::to_string(j) + " compare both ways");
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            for (std::size_t k = 0; k < size; ++k)
                if (leq[i][j] && leq[j][k] && !leq[i][k])
                    raise("NotAPoset", "chain " + std::to_string(i) + " <= " +
                                           std::to_string(j) + " <= " + std::to_string(k) +
                                           " does not compose");

    std::vector<std::uint64_t> rows(size, 0);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            if (leq[i][j]) rows[i] |= std::uint64_t{1} << j;
    return from_relation(size, rows);
}

finite_poset discrete_poset(std::size_t size) {
    if (size > 64)
        raise("SizeLimit", "posets are capped at 64 points");
    std::vector<std::uint64_t> rows(size);
    for (std::size_t i = 0; i < size; ++i) rows[i] = std::uint64_t{1} << i;
    return from_relation(size, rows);
}

finite_poset chain_poset(std::size_t size) {
    if (size > 64)
        raise("SizeLimit", "posets are capped at 64 points");
    std::vector<std::uint64_t> rows(size);
    for (std::size_t i = 0; i < size; ++i)
        rows[i] = (size >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1) &
                  ~((std::uint64_t{1} << i) - 1);
    return from_relation(size, rows);
}

std::vector<finite_poset> all_posets(std::size_t size) {
    if (size > 5)
        raise("SizeLimit", "exhaustive enumeration is kept to 5 points");

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i + 1; j < size; ++j) pairs.emplace_back(i, j);

    std::size_t codes = 1;
    for (std::size_t k = 0; k < pairs.size(); ++k) codes *= 3;

    std::set<std::vector<std::uint64_t>> seen;
    for (std::size_t code = 0; code < codes; ++code) {
        std::vector<std::uint64_t> rows(size);
        for (std::size_t i = 0; i < size; ++i) rows[i] = std::uint64_t{1} << i;
        std::size_t c = code;
        for (auto [i, j] : pairs) {
            switch (c % 3) {
            case 1: rows[i] |= std::uint64_t{1} << j; break;
            case 2: rows[j] |= std::uint64_t{1} << i; break;
            default: break;
            }
            c /= 3;
        }
        transitive_close(rows);
        if (antisymmetric(rows)) seen.insert(std::move(rows));
    }

    std::vector<finite_poset> out;
    out.reserve(seen.size());
    for (const auto& rows : seen) out.push_back(from_relation(size, rows));
    return out;
}

finite_poset random_poset(std::size_t size, std::mt19937_64& rng) {
    if (size > 64)
        raise("SizeLimit", "posets are capped at 64 points");
    std::vector<std::size_t> order(size);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<std::uint64_t> rows(size);
    for (std::size_t i = 0; i < size; ++i) rows[i] = std::uint64_t{1} << i;
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = a + 1; b < size; ++b)
            if (rng() & 1) rows[order[a]] |= std::uint64_t{1} << order[b];
    transitive_close(rows);
    return from_relation(size, rows);
}

bool is_open(const finite_poset& x, std::uint64_t a) {
    check_mask(x, a);
    for (std::size_t i = 0; i < x.size; ++i)
        if ((a >> i & 1) && (x.above[i] & ~a)) return false;
    return true;
}

std::uint64_t closure(const finite_poset& x, std::uint64_t a) {
    check_mask(x, a);
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < x.size; ++i)
        if (a >> i & 1) out |= x.below[i];
    return out;
}

std::uint64_t interior(const finite_poset& x, std::uint64_t a) {
    check_mask(x, a);
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < x.size; ++i)
        if ((a >> i & 1) && !(x.above[i] & ~a)) out |= std::uint64_t{1} << i;
    return out;
}

std::uint64_t regularize(const finite_poset& x, std::uint64_t u) {
    if (!is_open(x, u))
        raise("NotOpen", "regularization applies to open sets only");
    return interior(x, closure(x, u));
}

subset_algebra ro_algebra(const finite_poset& x) {
    if (x.size > 16)
        raise("SizeLimit", "subset algebras are capped at 16 points");
    std::vector<std::uint64_t> carrier;
    for (std::uint64_t m = 0; m <= x.all(); ++m)
        if (is_regular_open(x, m)) carrier.push_back(m);
    return algebra_from_carrier(
        x, std::move(carrier),
        [](const finite_poset& p, std::uint64_t a, std::uint64_t b) {
            return regularize(p, a | b);
        },
        [](const finite_poset& p, std::uint64_t a) {
            return interior(p, p.all() & ~closure(p, a));
        });
}

subset_algebra clopens(const finite_poset& x) {
    if (x.size > 16)
        raise("SizeLimit", "subset algebras are capped at 16 points");
    std::vector<std::uint64_t> carrier;
    for (std::uint64_t m = 0; m <= x.all(); ++m)
        if (is_open(x, m) && closure(x, m) == m) carrier.push_back(m);
    return algebra_from_carrier(
        x, std::move(carrier),
        [](const finite_poset&, std::uint64_t a, std::uint64_t b) { return a | b; },
        [](const finite_poset& p, std::uint64_t a) { return p.all() & ~a; });
}

namespace {

void check_family(const finite_poset& x, const std::vector<std::uint64_t>& family) {
    for (std::size_t i = 0; i < family.size(); ++i) {
        check_mask(x, family[i]);
        if (!is_open(x, family[i]) || regularize(x, family[i]) != family[i])
            raise("NotRegularOpen",
                  "family member " + std::to_string(i) + " is not regular open");
    }
}

} // namespace

std::uint64_t ro_sup(const finite_poset& x, const std::vector<std::uint64_t>& family) {
    check_family(x, family);
    std::uint64_t u = 0;
    for (auto m : family) u |= m;
    return regularize(x, u);
}

std::uint64_t ro_inf(const finite_poset& x, const std::vector<std::uint64_t>& family) {
    check_family(x, family);
    std::uint64_t u = x.all();
    for (auto m : family) u &= m;
    return u;
}

ed_report is_ED(const finite_poset& x) {
    if (x.size > 16)
        raise("SizeLimit", "the openness scan is capped at 16 points");
    for (std::uint64_t m = 0; m <= x.all(); ++m)
        if (is_open(x, m) && !is_open(x, closure(x, m))) return {false, m};
    return {true, 0};
}

} // namespace stonekit
