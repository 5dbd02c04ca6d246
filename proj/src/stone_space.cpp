#include "stonekit/stone_space.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace stonekit {

namespace {

void check_map_shape(const continuous_map& f) {
    if (f.assignment.size() != f.source_size)
        raise("ShapeMismatch", "map must assign every source point");
    for (std::uint32_t v : f.assignment)
        if (v >= f.target_size) raise("ShapeMismatch", "map target point out of range");
}

// Point index of the principal ultrafilter at each atom, i.e. the inverse of
// the witness_atom column of a stone space.
std::vector<std::size_t> atom_to_point(const stone_space& X) {
    std::vector<std::size_t> idx(X.algebra->size(), 0);
    for (std::size_t i = 0; i < X.points.size(); ++i)
        idx[X.points[i].witness_atom] = i;
    return idx;
}

} // namespace

finite_space make_space(std::vector<std::string> labels) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second)
            raise("ShapeMismatch", "duplicate point label: " + l);
    return finite_space{std::move(labels)};
}

finite_space discrete_space(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return finite_space{std::move(labels)};
}

stone_space make_stone_space(const algebra_ref& B) {
    return stone_space{B, enumerate_ultrafilters(B)};
}

continuous_map make_map(std::size_t source_size, std::size_t target_size,
                        std::vector<std::uint32_t> assignment) {
    continuous_map f{source_size, target_size, std::move(assignment)};
    check_map_shape(f);
    return f;
}

continuous_map identity_map(std::size_t n) {
    continuous_map f{n, n, std::vector<std::uint32_t>(n)};
    for (std::size_t i = 0; i < n; ++i) f.assignment[i] = static_cast<std::uint32_t>(i);
    return f;
}

continuous_map compose_maps(const continuous_map& g, const continuous_map& f) {
    check_map_shape(f);
    check_map_shape(g);
    if (f.target_size != g.source_size)
        raise("ShapeMismatch", "compose needs f.target = g.source");
    continuous_map r{f.source_size, g.target_size, {}};
    r.assignment.reserve(f.source_size);
    for (std::uint32_t v : f.assignment) r.assignment.push_back(g.assignment[v]);
    return r;
}

clopen_set hat(const stone_space& X, std::size_t a) {
    if (a >= X.algebra->size())
        raise("ShapeMismatch", "element index out of range");
    clopen_set c{X.points.size(), 0};
    for (std::size_t i = 0; i < X.points.size(); ++i)
        if (X.points[i].base.members[a]) c.members |= point_mask{1} << i;
    return c;
}

algebra_ref clop(const finite_space& X) {
    if (X.points.empty())
        raise("DegenerateAlgebra", "clopens of the empty space form a one-element algebra");
    if (X.points.size() > max_atoms)
        raise("SizeLimit", "clopen algebra of more than 16 points");
    return powerset_algebra(static_cast<unsigned>(X.points.size()));
}

bool_hom eta(const algebra_ref& B) {
    const stone_space X = make_stone_space(B);
    bool_hom h;
    h.source = B;
    h.target = powerset_algebra(static_cast<unsigned>(X.points.size()));
    h.map.resize(B->size());
    for (std::size_t a = 0; a < B->size(); ++a)
        h.map[a] = static_cast<elem>(hat(X, a).members);
    return h;
}

continuous_map phi(const finite_space& X) {
    const algebra_ref C = clop(X);
    const stone_space XC = make_stone_space(C);
    const std::size_t n = X.points.size();
    continuous_map f{n, XC.points.size(), std::vector<std::uint32_t>(n)};
    // U_x = {C : x in C} is principal at the atom {x}; locate that point.
    const auto idx = atom_to_point(XC);
    for (std::size_t x = 0; x < n; ++x)
        f.assignment[x] = static_cast<std::uint32_t>(idx[std::size_t{1} << x]);
    return f;
}

continuous_map dual_map(const bool_hom& h) {
    if (!check_hom(h))
        raise("NotAHom", "dual_map needs a Boolean homomorphism");
    const stone_space XB = make_stone_space(h.source);
    const stone_space XC = make_stone_space(h.target);
    const auto point_of_atom = atom_to_point(XB);
    const bool_algebra& B = *h.source;

    continuous_map f{XC.points.size(), XB.points.size(),
                     std::vector<std::uint32_t>(XC.points.size())};
    for (std::size_t j = 0; j < XC.points.size(); ++j) {
        const auto& U = XC.points[j].base.members;
        // phi^{-1}(U) is an ultrafilter of B; its minimum is its atom.
        elem m = B.one();
        for (std::size_t a = 0; a < B.size(); ++a)
            if (U[h.map[a]]) m = B.meet(m, a);
        f.assignment[j] = static_cast<std::uint32_t>(point_of_atom[m]);
    }
    return f;
}

bool_hom clop_pullback(const continuous_map& f) {
    check_map_shape(f);
    if (f.source_size > max_atoms || f.target_size > max_atoms)
        raise("SizeLimit", "clopen algebra of more than 16 points");
    if (f.source_size == 0 || f.target_size == 0)
        raise("DegenerateAlgebra", "clopens of the empty space form a one-element algebra");
    bool_hom h;
    h.source = powerset_algebra(static_cast<unsigned>(f.target_size));
    h.target = powerset_algebra(static_cast<unsigned>(f.source_size));
    h.map.resize(std::size_t{1} << f.target_size);
    for (std::size_t cy = 0; cy < h.map.size(); ++cy) {
        point_mask cx = 0;
        for (std::size_t x = 0; x < f.source_size; ++x)
            if (cy >> f.assignment[x] & 1) cx |= point_mask{1} << x;
        h.map[cy] = static_cast<elem>(cx);
    }
    return h;
}

check_report naturality_check(const bool_hom& h) {
    if (!check_hom(h))
        raise("NotAHom", "naturality_check needs a Boolean homomorphism");
    const stone_space XB = make_stone_space(h.source);
    const stone_space XC = make_stone_space(h.target);
    const continuous_map dual = dual_map(h);

    // eta square: pulling hat_B(a) back along phi^* must equal hat_C(phi(a)).
    for (std::size_t a = 0; a < h.source->size(); ++a) {
        const point_mask lhs_src = hat(XB, a).members;
        point_mask lhs = 0;
        for (std::size_t j = 0; j < XC.points.size(); ++j)
            if (lhs_src >> dual.assignment[j] & 1) lhs |= point_mask{1} << j;
        const point_mask rhs = hat(XC, h.map[a]).members;
        if (lhs != rhs)
            return {false, "eta square fails at element " + std::to_string(a)};
    }

    // phi square of the dualized morphism.
    return naturality_check(dual);
}

check_report naturality_check(const continuous_map& f) {
    check_map_shape(f);
    // S(C(f)) . phi_X = phi_Y . f, with X = source, Y = target.
    const continuous_map phi_x = phi(discrete_space(f.source_size));
    const continuous_map phi_y = phi(discrete_space(f.target_size));
    const continuous_map dual_of_pullback = dual_map(clop_pullback(f));
    for (std::size_t x = 0; x < f.source_size; ++x) {
        const std::uint32_t lhs = dual_of_pullback.assignment[phi_x.assignment[x]];
        const std::uint32_t rhs = phi_y.assignment[f.assignment[x]];
        if (lhs != rhs)
            return {false, "phi square fails at point " + std::to_string(x)};
    }
    return {true, ""};
}

beta_result beta_finite(const finite_space& S) {
    return beta_result{make_stone_space(clop(S)), phi(S)};
}

continuous_map gleason_lift(const continuous_map& f, const continuous_map& g) {
    check_map_shape(f);
    check_map_shape(g);
    if (f.target_size != g.target_size)
        raise("ShapeMismatch", "f and g must share their target space");

    // Lowest-index preimage per target point; any gap kills surjectivity.
    std::vector<std::uint32_t> first(f.target_size, std::numeric_limits<std::uint32_t>::max());
    for (std::size_t x = f.source_size; x-- > 0;)
        first[f.assignment[x]] = static_cast<std::uint32_t>(x);
    for (std::size_t y = 0; y < f.target_size; ++y)
        if (first[y] == std::numeric_limits<std::uint32_t>::max())
            raise("NotSurjective", "no preimage for target point " + std::to_string(y));

    continuous_map h{g.source_size, f.source_size, std::vector<std::uint32_t>(g.source_size)};
    for (std::size_t p = 0; p < g.source_size; ++p)
        h.assignment[p] = first[g.assignment[p]];
    return h;
}

} // namespace stonekit
