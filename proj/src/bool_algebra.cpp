#include "stonekit/bool_algebra.hpp"

#include <algorithm>
#include <string>

namespace stonekit {

namespace {

[[noreturn]] void broken(const char* axiom, std::vector<std::size_t> w,
                         const std::string& what) {
    throw axiom_violation(axiom, std::move(w), what);
}

void check_shape(const raw_tables& t) {
    if (t.size == 0)
        raise("ShapeMismatch", "algebra needs at least one element");
    if (t.size > max_algebra_size)
        raise("SizeLimit", "algebra exceeds 2^16 elements");
    const std::size_t n = t.size;
    if (t.meet.size() != n * n || t.join.size() != n * n)
        raise("ShapeMismatch", "meet/join tables must be size*size");
    if (t.neg.size() != n)
        raise("ShapeMismatch", "neg table must have one entry per element");
    if (t.zero >= n || t.one >= n)
        raise("ShapeMismatch", "zero/one index out of range");
    for (elem v : t.meet)
        if (v >= n) raise("ShapeMismatch", "meet entry out of range");
    for (elem v : t.join)
        if (v >= n) raise("ShapeMismatch", "join entry out of range");
    for (elem v : t.neg)
        if (v >= n) raise("ShapeMismatch", "neg entry out of range");
}

void check_degenerate(const raw_tables& t) {
    if (t.zero == t.one)
        raise("DegenerateAlgebra", "zero equals one: the one-element algebra is rejected");
}

std::string at2(std::size_t a, std::size_t b) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

std::string at3(std::size_t a, std::size_t b, std::size_t c) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

} // namespace

namespace detail {

algebra_ref adopt_tables(raw_tables t) {
    check_shape(t);
    check_degenerate(t);
    return algebra_ref(new bool_algebra(std::move(t)));
}

} // namespace detail

algebra_ref validate_algebra(const raw_tables& t) {
    check_shape(t);
    check_degenerate(t);
    const std::size_t n = t.size;
    auto mt = [&](std::size_t a, std::size_t b) -> std::size_t { return t.meet[a * n + b]; };
    auto jn = [&](std::size_t a, std::size_t b) -> std::size_t { return t.join[a * n + b]; };

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (mt(a, b) != mt(b, a))
                broken("commutativity", {a, b}, "meet not commutative at " + at2(a, b));
            if (jn(a, b) != jn(b, a))
                broken("commutativity", {a, b}, "join not commutative at " + at2(a, b));
        }

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                if (mt(mt(a, b), c) != mt(a, mt(b, c)))
                    broken("associativity", {a, b, c}, "meet not associative at " + at3(a, b, c));
                if (jn(jn(a, b), c) != jn(a, jn(b, c)))
                    broken("associativity", {a, b, c}, "join not associative at " + at3(a, b, c));
            }

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (mt(a, jn(a, b)) != a)
                broken("absorption", {a, b}, "a /\\ (a \\/ b) != a at " + at2(a, b));
            if (jn(a, mt(a, b)) != a)
                broken("absorption", {a, b}, "a \\/ (a /\\ b) != a at " + at2(a, b));
        }

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                if (mt(a, jn(b, c)) != jn(mt(a, b), mt(a, c)))
                    broken("distributivity", {a, b, c},
                           "a /\\ (b \\/ c) != (a /\\ b) \\/ (a /\\ c) at " + at3(a, b, c));
                if (jn(a, mt(b, c)) != mt(jn(a, b), jn(a, c)))
                    broken("distributivity", {a, b, c},
                           "a \\/ (b /\\ c) != (a \\/ b) /\\ (a \\/ c) at " + at3(a, b, c));
            }

    for (std::size_t a = 0; a < n; ++a) {
        if (mt(a, t.neg[a]) != t.zero)
            broken("complement", {a}, "a /\\ -a != 0 at element " + std::to_string(a));
        if (jn(a, t.neg[a]) != t.one)
            broken("complement", {a}, "a \\/ -a != 1 at element " + std::to_string(a));
    }

    for (std::size_t a = 0; a < n; ++a)
        if (mt(a, t.zero) != t.zero || jn(a, t.zero) != a ||
            mt(a, t.one) != a || jn(a, t.one) != t.one)
            broken("bounds", {a}, "0/1 not lattice bounds at element " + std::to_string(a));

    return detail::adopt_tables(t);
}

algebra_ref powerset_algebra(unsigned atom_count) {
    if (atom_count == 0)
        raise("DegenerateAlgebra", "powerset of the empty set has a single element");
    if (atom_count > max_atoms)
        raise("SizeLimit", "more than 16 atoms");
    const std::size_t n = std::size_t{1} << atom_count;
    raw_tables t;
    t.size = n;
    t.zero = 0;
    t.one = static_cast<elem>(n - 1);
    t.meet.resize(n * n);
    t.join.resize(n * n);
    t.neg.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            t.meet[a * n + b] = static_cast<elem>(a & b);
            t.join[a * n + b] = static_cast<elem>(a | b);
        }
        t.neg[a] = static_cast<elem>((n - 1) ^ a);
    }
    return detail::adopt_tables(std::move(t));
}

std::vector<long long> ring_idempotents(long long n) {
    if (n < 2)
        raise("InvalidModulus", "idempotents of Z/n need n >= 2");
    std::vector<long long> es;
    for (long long e = 0; e < n; ++e)
        if ((e * e) % n == e) es.push_back(e);
    return es;
}

algebra_ref idempotent_algebra(long long n) {
    const auto es = ring_idempotents(n);  // ascending by construction
    const std::size_t m = es.size();
    auto index_of = [&](long long v) {
        return static_cast<elem>(std::lower_bound(es.begin(), es.end(), v) - es.begin());
    };
    auto norm = [&](long long v) { return ((v % n) + n) % n; };

    raw_tables t;
    t.size = m;
    t.zero = index_of(0);
    t.one = index_of(1);
    t.meet.resize(m * m);
    t.join.resize(m * m);
    t.neg.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const long long e = es[i];
        for (std::size_t j = 0; j < m; ++j) {
            const long long f = es[j];
            t.meet[i * m + j] = index_of(norm(e * f));
            t.join[i * m + j] = index_of(norm(e + f - e * f));
        }
        t.neg[i] = index_of(norm(1 - e));
    }
    // The closure under these operations is a theorem; validating anyway keeps
    // the construction honest for every modulus thrown at it.
    return validate_algebra(t);
}

const algebra_ref& two_algebra() {
    static const algebra_ref two = powerset_algebra(1);
    return two;
}

atom_basis atoms_of(const bool_algebra& B) {
    const std::size_t n = B.size();
    atom_basis ab;
    for (std::size_t a = 0; a < n; ++a) {
        if (a == B.zero()) continue;
        bool minimal = true;
        for (std::size_t b = 0; b < n; ++b) {
            if (b == B.zero() || b == a) continue;
            if (B.leq(b, a)) { minimal = false; break; }
        }
        if (minimal) ab.atoms.push_back(static_cast<elem>(a));
    }
    if (ab.atoms.size() > 32)
        raise("SizeLimit", "atom mask wider than 32 bits; algebra cannot be valid");
    ab.mask_of.resize(n);
    for (std::size_t e = 0; e < n; ++e) {
        std::uint32_t m = 0;
        for (std::size_t i = 0; i < ab.atoms.size(); ++i)
            if (B.leq(ab.atoms[i], e)) m |= std::uint32_t{1} << i;
        ab.mask_of[e] = m;
    }
    return ab;
}

subalgebra subalgebra_generated(const algebra_ref& B, const std::vector<elem>& gens) {
    const bool_algebra& A = *B;
    const std::size_t n = A.size();
    std::vector<char> in(n, 0);
    in[A.zero()] = 1;
    in[A.one()] = 1;
    for (elem g : gens) {
        if (g >= n) raise("ShapeMismatch", "generator index out of range");
        in[g] = 1;
    }

    // Fixed-point closure under the three operations.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<elem> cur;
        for (std::size_t i = 0; i < n; ++i)
            if (in[i]) cur.push_back(static_cast<elem>(i));
        for (elem a : cur) {
            const elem na = A.neg(a);
            if (!in[na]) { in[na] = 1; grew = true; }
            for (elem b : cur) {
                const elem m = A.meet(a, b);
                const elem j = A.join(a, b);
                if (!in[m]) { in[m] = 1; grew = true; }
                if (!in[j]) { in[j] = 1; grew = true; }
            }
        }
    }

    std::vector<elem> carrier;
    for (std::size_t i = 0; i < n; ++i)
        if (in[i]) carrier.push_back(static_cast<elem>(i));
    std::vector<elem> sub_index(n, 0);
    for (std::size_t i = 0; i < carrier.size(); ++i) sub_index[carrier[i]] = static_cast<elem>(i);

    const std::size_t m = carrier.size();
    raw_tables t;
    t.size = m;
    t.zero = sub_index[A.zero()];
    t.one = sub_index[A.one()];
    t.meet.resize(m * m);
    t.join.resize(m * m);
    t.neg.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            t.meet[i * m + j] = sub_index[A.meet(carrier[i], carrier[j])];
            t.join[i * m + j] = sub_index[A.join(carrier[i], carrier[j])];
        }
        t.neg[i] = sub_index[A.neg(carrier[i])];
    }

    subalgebra s;
    s.algebra = detail::adopt_tables(std::move(t));
    s.carrier = std::move(carrier);
    for (elem a : atoms_of(*s.algebra).atoms)
        s.granules.push_back(s.carrier[a]);  // carrier ascending => granules ascending
    return s;
}

bool check_hom(const bool_hom& h) {
    if (!h.source || !h.target)
        raise("ShapeMismatch", "hom needs source and target algebras");
    const bool_algebra& S = *h.source;
    const bool_algebra& T = *h.target;
    if (h.map.size() != S.size())
        raise("ShapeMismatch", "hom table length differs from source size");
    for (elem v : h.map)
        if (v >= T.size()) raise("ShapeMismatch", "hom entry out of range");

    if (h.map[S.zero()] != T.zero()) return false;
    if (h.map[S.one()] != T.one()) return false;
    for (std::size_t a = 0; a < S.size(); ++a)
        if (h.map[S.neg(a)] != T.neg(h.map[a])) return false;
    for (std::size_t a = 0; a < S.size(); ++a)
        for (std::size_t b = 0; b < S.size(); ++b) {
            if (h.map[S.meet(a, b)] != T.meet(h.map[a], h.map[b])) return false;
            if (h.map[S.join(a, b)] != T.join(h.map[a], h.map[b])) return false;
        }
    return true;
}

bool_hom compose_homs(const bool_hom& g, const bool_hom& f) {
    if (!f.source || !f.target || !g.source || !g.target)
        raise("ShapeMismatch", "hom needs source and target algebras");
    if (f.map.size() != f.source->size() || g.map.size() != g.source->size())
        raise("ShapeMismatch", "hom table length differs from source size");
    if (!(*f.target == *g.source))
        raise("ShapeMismatch", "compose needs f.target = g.source");
    bool_hom r;
    r.source = f.source;
    r.target = g.target;
    r.map.reserve(f.map.size());
    for (elem v : f.map) {
        if (v >= g.map.size()) raise("ShapeMismatch", "hom entry out of range");
        r.map.push_back(g.map[v]);
    }
    return r;
}

bool_hom identity_hom(const algebra_ref& B) {
    bool_hom h;
    h.source = B;
    h.target = B;
    h.map.resize(B->size());
    for (std::size_t i = 0; i < B->size(); ++i) h.map[i] = static_cast<elem>(i);
    return h;
}

std::vector<bool_hom> homs_to_two(const algebra_ref& B) {
    const atom_basis ab = atoms_of(*B);
    std::vector<bool_hom> out;
    out.reserve(ab.atoms.size());
    for (elem t : ab.atoms) {
        bool_hom h;
        h.source = B;
        h.target = two_algebra();
        h.map.resize(B->size());
        for (std::size_t a = 0; a < B->size(); ++a)
            h.map[a] = B->leq(t, a) ? 1 : 0;
        out.push_back(std::move(h));
    }
    return out;
}

} // namespace stonekit
