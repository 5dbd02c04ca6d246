#include "stonekit/laws.hpp"

#include "stonekit/alexandrov.hpp"
#include "stonekit/bool_algebra.hpp"
#include "stonekit/clopen_zp.hpp"
#include "stonekit/errors.hpp"
#include "stonekit/filters.hpp"
#include "stonekit/profinite.hpp"
#include "stonekit/stone_space.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <numeric>
#include <random>
#include <string_view>

namespace stonekit::laws {

namespace {

// =========================================================================
// Check plumbing
// =========================================================================

struct check_failure {
    std::string detail;
};

void expect(bool ok, std::string detail) {
    if (!ok) throw check_failure{std::move(detail)};
}

// Each law folds its name into the seed, so adding or reordering laws never
// shifts the random stream another law sees.
std::mt19937_64 tagged_rng(std::uint64_t seed, std::string_view tag) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : tag) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return std::mt19937_64(seed ^ h);
}

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return lo + rng() % (hi - lo + 1);
}

// =========================================================================
// Instance generators
// =========================================================================

// Powerset algebra with the element indices scrambled by a random
// permutation, so structural checks cannot lean on the mask encoding.
algebra_ref relabeled_powerset(unsigned atoms, std::mt19937_64& rng) {
    const std::size_t n = std::size_t{1} << atoms;
    std::vector<elem> sigma(n);
    std::iota(sigma.begin(), sigma.end(), elem{0});
    std::shuffle(sigma.begin(), sigma.end(), rng);

    raw_tables t;
    t.size = n;
    t.zero = sigma[0];
    t.one = sigma[n - 1];
    t.meet.resize(n * n);
    t.join.resize(n * n);
    t.neg.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        t.neg[sigma[a]] = sigma[(n - 1) & ~a];
        for (std::size_t b = 0; b < n; ++b) {
            t.meet[sigma[a] * n + sigma[b]] = sigma[a & b];
            t.join[sigma[a] * n + sigma[b]] = sigma[a | b];
        }
    }
    return validate_algebra(t);
}

// Shared pool for the algebra-level laws: every shape with at most 4 atoms
// (plain and relabeled), a few idempotent algebras, and 200 larger random
// relabelings.  Same tag everywhere, so the laws all see the same pool.
std::vector<algebra_ref> algebra_instances(std::uint64_t seed) {
    auto rng = tagged_rng(seed, "algebra-instances");
    std::vector<algebra_ref> out;
    for (unsigned k = 1; k <= 4; ++k) {
        out.push_back(powerset_algebra(k));
        for (int i = 0; i < 15; ++i) out.push_back(relabeled_powerset(k, rng));
    }
    for (long long n : {2LL, 6LL, 12LL, 30LL, 60LL, 210LL})
        out.push_back(idempotent_algebra(n));
    for (int i = 0; i < 190; ++i)
        out.push_back(relabeled_powerset(static_cast<unsigned>(pick(rng, 5, 6)), rng));
    for (int i = 0; i < 10; ++i) out.push_back(relabeled_powerset(7, rng));
    return out;
}

// Shared pool for the Alexandrov laws: every poset on 1..5 points plus 500
// random ones on 6 or 7.
std::vector<finite_poset> poset_instances(std::uint64_t seed) {
    auto rng = tagged_rng(seed, "poset-instances");
    std::vector<finite_poset> out;
    for (std::size_t n = 1; n <= 5; ++n) {
        auto batch = all_posets(n);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    for (int i = 0; i < 500; ++i) out.push_back(random_poset(pick(rng, 6, 7), rng));
    return out;
}

big_int random_big(std::mt19937_64& rng) {
    big_int z = rng();
    z <<= 64;
    z += rng();
    if (rng() & 1) z = -z;
    return z;
}

// Reference reduction of an arbitrary integer, level by level.
padic_int reduced(unsigned p, const big_int& z, std::size_t n) {
    padic_int x;
    x.p = p;
    x.residues.resize(n);
    big_int m = p;
    for (std::size_t k = 0; k < n; ++k) {
        big_int r = z % m;
        if (r < 0) r += m;
        x.residues[k] = r;
        m *= p;
    }
    return x;
}

// =========================================================================
// The laws
// =========================================================================

std::string law_stone_representation(std::uint64_t seed) {
    auto instances = algebra_instances(seed);
    for (const auto& B : instances) {
        bool_hom h = eta(B);
        const std::string where = " (instance of size " + std::to_string(B->size()) + ")";
        expect(check_hom(h), "eta is not a homomorphism" + where);
        expect(h.target->size() == B->size(), "eta target has the wrong size" + where);
        std::vector<bool> hit(h.target->size(), false);
        for (elem v : h.map) {
            expect(!hit[v], "eta is not injective" + where);
            hit[v] = true;
        }
    }
    return std::to_string(instances.size()) + " instances, eta a bijective hom on each";
}

std::string law_hat_identities(std::uint64_t seed) {
    auto instances = algebra_instances(seed);
    for (const auto& B : instances) {
        stone_space X = make_stone_space(B);
        const std::size_t n = B->size();
        const std::size_t k = X.points.size();
        const point_mask full =
            k >= 32 ? ~point_mask{0} : static_cast<point_mask>((point_mask{1} << k) - 1);
        std::vector<point_mask> hm(n);
        for (std::size_t a = 0; a < n; ++a) hm[a] = hat(X, a).members;
        const std::string where = " (instance of size " + std::to_string(n) + ")";
        expect(hm[B->zero()] == 0, "hat(0) is not empty" + where);
        expect(hm[B->one()] == full, "hat(1) is not the whole space" + where);
        for (std::size_t a = 0; a < n; ++a) {
            expect(hm[B->neg(a)] == (full & ~hm[a]), "hat misses a complement" + where);
            for (std::size_t b = 0; b < n; ++b) {
                expect(hm[B->meet(a, b)] == (hm[a] & hm[b]), "hat misses a meet" + where);
                expect(hm[B->join(a, b)] == (hm[a] | hm[b]), "hat misses a join" + where);
            }
        }
    }
    return std::to_string(instances.size()) + " instances, all five identities exhaustive";
}

bool is_permutation_map(const std::vector<std::uint32_t>& a, std::size_t n) {
    if (a.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (std::uint32_t v : a) {
        if (v >= n || hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

std::string law_space_homeomorphism(std::uint64_t) {
    for (std::size_t n = 1; n <= 10; ++n) {
        finite_space S = discrete_space(n);
        const std::string where = " (space with " + std::to_string(n) + " points)";
        expect(clop(S)->size() == (std::size_t{1} << n), "clop has the wrong size" + where);
        continuous_map f = phi(S);
        expect(f.source_size == n && f.target_size == n, "phi changes the point count" + where);
        expect(is_permutation_map(f.assignment, n), "phi is not a bijection" + where);
        beta_result br = beta_finite(S);
        expect(br.space.points.size() == n, "beta changes the point count" + where);
        expect(is_permutation_map(br.unit.assignment, n), "beta unit is not a bijection" + where);
    }
    return "phi and the beta unit bijective for 1..10 points";
}

// Hom of powerset algebras dual to a given point map: bit j of h(a) is bit
// f[j] of a.
bool_hom preimage_hom(const algebra_ref& A, const algebra_ref& B,
                      const std::vector<std::uint32_t>& f, unsigned kb) {
    bool_hom h{A, B, std::vector<elem>(A->size())};
    for (std::size_t a = 0; a < A->size(); ++a) {
        elem img = 0;
        for (unsigned j = 0; j < kb; ++j)
            if (a >> f[j] & 1) img |= elem(1) << j;
        h.map[a] = img;
    }
    return h;
}

std::string law_duality_functor(std::uint64_t seed) {
    auto rng = tagged_rng(seed, "duality-functor");
    for (int iter = 0; iter < 500; ++iter) {
        const unsigned ka = static_cast<unsigned>(pick(rng, 1, 3));
        const unsigned kb = static_cast<unsigned>(pick(rng, 1, 3));
        const unsigned kc = static_cast<unsigned>(pick(rng, 1, 3));
        algebra_ref A = powerset_algebra(ka);
        algebra_ref B = powerset_algebra(kb);
        algebra_ref C = powerset_algebra(kc);

        std::vector<std::uint32_t> pf(kb), pg(kc);
        for (auto& v : pf) v = static_cast<std::uint32_t>(rng() % ka);
        for (auto& v : pg) v = static_cast<std::uint32_t>(rng() % kb);
        bool_hom f = preimage_hom(A, B, pf, kb);
        bool_hom g = preimage_hom(B, C, pg, kc);
        expect(check_hom(f) && check_hom(g), "generated preimage map is not a hom");

        expect(dual_map(f).assignment == pf, "dual of a preimage hom is not the point map");
        expect(naturality_check(f).ok, "naturality square fails for a hom");

        continuous_map lhs = dual_map(compose_homs(g, f));
        continuous_map rhs = compose_maps(dual_map(f), dual_map(g));
        expect(lhs.assignment == rhs.assignment, "dual of a composite is not the reversed composite");

        continuous_map idd = dual_map(identity_hom(A));
        for (std::size_t i = 0; i < ka; ++i)
            expect(idd.assignment[i] == i, "dual of the identity hom moves a point");
    }
    return "500 random hom pairs, contravariant and natural";
}

std::string law_ultrafilter_hom_bijection(std::uint64_t seed) {
    auto instances = algebra_instances(seed);
    for (const auto& B : instances) {
        auto ultras = enumerate_ultrafilters(B);
        auto homs = homs_to_two(B);
        const std::string where = " (instance of size " + std::to_string(B->size()) + ")";
        expect(ultras.size() == homs.size(), "ultrafilter and hom counts differ" + where);
        expect(ultras.size() == atoms_of(*B).atoms.size(), "count differs from atom count" + where);
        for (const auto& u : ultras) {
            bool_hom v = ultrafilter_to_hom(u);
            expect(check_hom(v), "induced evaluation is not a hom" + where);
            ultrafilter back = hom_to_ultrafilter(v);
            expect(back.witness_atom == u.witness_atom && back.base.members == u.base.members,
                   "ultrafilter round trip is not the identity" + where);
        }
        for (const auto& v : homs) {
            bool_hom back = ultrafilter_to_hom(hom_to_ultrafilter(v));
            expect(back.map == v.map, "hom round trip is not the identity" + where);
        }
    }
    return std::to_string(instances.size()) + " instances, both round trips identity";
}

unsigned distinct_prime_factors(long long n) {
    unsigned count = 0;
    for (long long q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        ++count;
        while (n % q == 0) n /= q;
    }
    if (n > 1) ++count;
    return count;
}

std::string law_idempotent_atoms(std::uint64_t) {
    for (long long n = 2; n <= 10000; ++n) {
        algebra_ref B = idempotent_algebra(n);
        const unsigned w = distinct_prime_factors(n);
        const std::string where = " (modulus " + std::to_string(n) + ")";
        expect(B->size() == (std::size_t{1} << w), "idempotent count is not 2^omega" + where);
        expect(atoms_of(*B).atoms.size() == w, "atom count differs from omega" + where);
    }
    return "E(Z/n) matches 2^omega(n) for all n <= 10000";
}

std::string law_padic_ring_oracle(std::uint64_t seed) {
    auto rng = tagged_rng(seed, "padic-ring-oracle");
    for (unsigned p : {2u, 3u, 5u}) {
        const std::string where = " (p = " + std::to_string(p) + ")";
        for (int iter = 0; iter < 10000; ++iter) {
            const std::size_t n = pick(rng, 1, 64);
            big_int a = random_big(rng);
            big_int b = random_big(rng);
            padic_int x = reduced(p, a, n);
            padic_int y = reduced(p, b, n);
            expect(padic_add(x, y).residues == reduced(p, a + b, n).residues,
                   "addition disagrees with the integer oracle" + where);
            expect(padic_mul(x, y).residues == reduced(p, a * b, n).residues,
                   "multiplication disagrees with the integer oracle" + where);
            expect(padic_neg(x).residues == reduced(p, -a, n).residues,
                   "negation disagrees with the integer oracle" + where);
        }
    }
    for (int iter = 0; iter < 500; ++iter) {
        std::vector<int> bits(32);
        for (auto& b : bits) b = static_cast<int>(rng() & 1);
        padic_int x = digits_to_padic(bits);
        expect(cantor_digits(x) == bits, "digit round trip is not the identity");
        padic_int y = reduced(2, random_big(rng), 32);
        expect(digits_to_padic(cantor_digits(y)).residues == y.residues,
               "element round trip is not the identity");
    }
    return "30000 oracle cases over p in {2,3,5}, 500 digit round trips";
}

std::string law_zhat_compatibility(std::uint64_t) {
    std::vector<std::uint64_t> moduli(24);
    std::iota(moduli.begin(), moduli.end(), std::uint64_t{1});
    for (long long z = -10000; z <= 10000; ++z) {
        zhat_element e = zhat_from_int(z, moduli);
        for (const auto& [n, rn] : e.residues)
            for (const auto& [m, rm] : e.residues)
                if (n % m == 0)
                    expect(rn % m == rm,
                           "incompatible residues at z = " + std::to_string(z));
    }
    for (std::uint64_t n = 1; n <= 50; ++n) {
        std::vector<std::uint64_t> divs;
        for (std::uint64_t d = 1; d <= n; ++d)
            if (n % d == 0) divs.push_back(d);
        for (std::uint64_t r = 0; r < n; ++r)
            expect(zhat_reduce(zhat_from_int(static_cast<long long>(r), divs), n) == r,
                   "level map misses residue " + std::to_string(r) + " mod " +
                       std::to_string(n));
    }
    return "20001 embedded integers compatible, levels 1..50 surjective";
}

bool mask_subset(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }

void check_bounds(const finite_poset& x, const subset_algebra& ro,
                  const std::vector<std::uint64_t>& family) {
    const std::uint64_t s = ro_sup(x, family);
    const std::uint64_t i = ro_inf(x, family);
    bool s_found = false;
    bool i_found = false;
    for (std::uint64_t c : ro.carrier) {
        s_found = s_found || c == s;
        i_found = i_found || c == i;
        bool upper = true;
        bool lower = true;
        for (std::uint64_t u : family) {
            upper = upper && mask_subset(u, c);
            lower = lower && mask_subset(c, u);
        }
        if (upper) expect(mask_subset(s, c), "supremum is not least");
        if (lower) expect(mask_subset(c, i), "infimum is not greatest");
    }
    expect(s_found && i_found, "bound falls outside the carrier");
    for (std::uint64_t u : family) {
        expect(mask_subset(u, s), "supremum is not an upper bound");
        expect(mask_subset(i, u), "infimum is not a lower bound");
    }
}

std::string law_ro_completeness(std::uint64_t seed) {
    auto instances = poset_instances(seed);
    auto rng = tagged_rng(seed, "ro-completeness");
    for (const auto& x : instances) {
        subset_algebra ro = ro_algebra(x);
        for (std::uint64_t u : ro.carrier)
            expect(is_open(x, u) && regularize(x, u) == u,
                   "carrier member is not regular open");
        const std::size_t k = ro.carrier.size();
        if (k <= 8) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
                std::vector<std::uint64_t> family;
                for (std::size_t j = 0; j < k; ++j)
                    if (mask >> j & 1) family.push_back(ro.carrier[j]);
                check_bounds(x, ro, family);
            }
        } else {
            check_bounds(x, ro, {});
            check_bounds(x, ro, ro.carrier);
            for (int t = 0; t < 60; ++t) {
                std::vector<std::uint64_t> family;
                for (std::uint64_t c : ro.carrier)
                    if (rng() & 1) family.push_back(c);
                check_bounds(x, ro, family);
            }
        }
    }
    return std::to_string(instances.size()) +
           " posets, every family has least/greatest bounds in RO";
}

std::string law_ed_clopen_collapse(std::uint64_t seed) {
    auto instances = poset_instances(seed);
    std::size_t ed_count = 0;
    for (const auto& x : instances) {
        subset_algebra ro = ro_algebra(x);
        subset_algebra cl = clopens(x);
        const bool collapse = ro.carrier == cl.carrier;
        ed_report rep = is_ED(x);
        expect(rep.ed == collapse, "ED verdict differs from the RO = Clop test");
        bool closures_open = true;
        std::uint64_t bad = 0;
        for (std::uint64_t u = 0; u < (std::uint64_t{1} << x.size); ++u) {
            if (!is_open(x, u)) continue;
            if (!is_open(x, closure(x, u))) {
                closures_open = false;
                bad = u;
                break;
            }
        }
        expect(rep.ed == closures_open, "ED verdict differs from the closure scan");
        if (!rep.ed) {
            expect(is_open(x, rep.witness) && !is_open(x, closure(x, rep.witness)),
                   "reported witness does not break extremal disconnectedness");
            expect(rep.witness == bad, "witness is not the first in mask order");
        } else {
            ++ed_count;
            std::vector<std::uint64_t> opens;
            for (std::uint64_t u = 0; u < (std::uint64_t{1} << x.size); ++u)
                if (is_open(x, u)) opens.push_back(u);
            for (std::size_t a = 0; a < opens.size(); ++a)
                for (std::size_t b = a + 1; b < opens.size(); ++b)
                    if ((opens[a] & opens[b]) == 0)
                        expect((closure(x, opens[a]) & closure(x, opens[b])) == 0,
                               "disjoint opens have meeting closures in an ED space");
        }
    }
    return std::to_string(instances.size()) + " posets, " + std::to_string(ed_count) +
           " extremally disconnected, all verdicts agree";
}

std::string law_gleason_lifting(std::uint64_t seed) {
    auto rng = tagged_rng(seed, "gleason-lifting");
    for (int iter = 0; iter < 1000; ++iter) {
        const std::size_t nx = pick(rng, 1, 5);
        const std::size_t ny = pick(rng, 1, nx);
        const std::size_t np = pick(rng, 1, 5);

        std::vector<std::uint32_t> fa(nx);
        for (std::size_t i = 0; i < nx; ++i)
            fa[i] = static_cast<std::uint32_t>(i < ny ? i : rng() % ny);
        std::shuffle(fa.begin(), fa.end(), rng);
        continuous_map f = make_map(nx, ny, fa);

        std::vector<std::uint32_t> ga(np);
        for (auto& v : ga) v = static_cast<std::uint32_t>(rng() % ny);
        continuous_map g = make_map(np, ny, ga);

        continuous_map h = gleason_lift(f, g);
        expect(compose_maps(f, h).assignment == g.assignment, "lift does not factor g through f");
        for (std::size_t q = 0; q < np; ++q)
            for (std::uint32_t x = 0; x < h.assignment[q]; ++x)
                expect(fa[x] != ga[q], "lift is not the lowest-index preimage");

        if (iter % 100 == 0) {
            continuous_map fbad = make_map(nx, ny + 1, fa);
            continuous_map gbad = make_map(np, ny + 1, ga);
            bool raised = false;
            try {
                gleason_lift(fbad, gbad);
            } catch (const domain_error& e) {
                raised = e.name() == "NotSurjective";
            }
            expect(raised, "non-surjection was accepted");
        }
    }
    return "1000 random triples factor through the lowest preimage";
}

zp_clopen random_clopen(unsigned p, unsigned max_level, std::mt19937_64& rng) {
    const unsigned level = static_cast<unsigned>(pick(rng, 0, max_level));
    std::uint32_t balls = 1;
    for (unsigned i = 0; i < level; ++i) balls *= p;
    std::vector<std::uint32_t> members;
    for (std::uint32_t r = 0; r < balls; ++r)
        if (rng() & 1) members.push_back(r);
    return normalize(p, level, std::move(members));
}

bool clopen_subset(const zp_clopen& a, const zp_clopen& b) {
    return clopen_intersection(a, b) == a;
}

std::string law_granule_operator(std::uint64_t seed) {
    auto rng = tagged_rng(seed, "granule-operator");
    for (unsigned p : {2u, 3u}) {
        const std::string where = " (p = " + std::to_string(p) + ")";
        for (int iter = 0; iter < 500; ++iter) {
            zp_clopen e = random_clopen(p, 6, rng);
            zp_clopen f = clopen_union(e, random_clopen(p, 6, rng));
            zp_clopen prev;
            for (unsigned n = 0; n <= 6; ++n) {
                level_algebra b0 = make_level_algebra(p, n);
                zp_clopen ge = granule_operator(b0, e);
                expect(ge.level <= n, "granule leaves the chosen level" + where);
                expect(clopen_subset(ge, e), "granule is not contractive" + where);
                expect(clopen_subset(ge, granule_operator(b0, f)),
                       "granule is not monotone" + where);
                expect(granule_operator(b0, ge) == ge,
                       "granule is not idempotent at its level" + where);
                if (n > 0)
                    expect(clopen_subset(prev, ge), "refinement chain is not increasing" + where);
                prev = ge;

                std::uint32_t balls = 1;
                for (unsigned i = 0; i < n; ++i) balls *= p;
                zp_clopen ball = normalize(p, n, {static_cast<std::uint32_t>(rng() % balls)});
                expect(granule_operator(b0, ball) == ball,
                       "a single ball is not a fixed point" + where);
            }
        }
    }
    return "1000 random clopens over p in {2,3}, granules contractive and monotone";
}

// =========================================================================
// Catalogue
// =========================================================================

struct law_entry {
    const char* name;
    std::string (*body)(std::uint64_t);
};

constexpr law_entry catalogue[] = {
    {"stone-representation", law_stone_representation},
    {"hat-identities", law_hat_identities},
    {"space-homeomorphism", law_space_homeomorphism},
    {"duality-functor", law_duality_functor},
    {"ultrafilter-hom-bijection", law_ultrafilter_hom_bijection},
    {"idempotent-atoms", law_idempotent_atoms},
    {"padic-ring-oracle", law_padic_ring_oracle},
    {"zhat-compatibility", law_zhat_compatibility},
    {"ro-completeness", law_ro_completeness},
    {"ed-clopen-collapse", law_ed_clopen_collapse},
    {"gleason-lifting", law_gleason_lifting},
    {"granule-operator", law_granule_operator},
};

} // namespace

const std::vector<std::string>& law_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& e : catalogue) v.emplace_back(e.name);
        return v;
    }();
    return names;
}

law_result run_law(const std::string& name, std::uint64_t seed) {
    for (const auto& e : catalogue) {
        if (name != e.name) continue;
        try {
            return {name, true, e.body(seed)};
        } catch (const check_failure& f) {
            return {name, false, f.detail};
        } catch (const domain_error& err) {
            return {name, false, err.name() + ": " + err.what()};
        } catch (const std::exception& ex) {
            return {name, false, ex.what()};
        }
    }
    raise("UnknownLaw", "no law is named '" + name + "'");
}

std::vector<law_result> run_all(std::uint64_t seed, bool concurrent) {
    std::vector<law_result> out;
    if (!concurrent) {
        for (const auto& e : catalogue) out.push_back(run_law(e.name, seed));
        return out;
    }
    std::vector<std::future<law_result>> futures;
    for (const auto& e : catalogue)
        futures.push_back(std::async(std::launch::async,
                                     [name = std::string(e.name), seed] {
                                         return run_law(name, seed);
                                     }));
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

} // namespace stonekit::laws
