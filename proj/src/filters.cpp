#include "stonekit/filters.hpp"

namespace stonekit {

namespace {

void check_filter_shape(const filter& F) {
    if (!F.algebra)
        raise("ShapeMismatch", "filter needs an algebra");
    if (F.members.size() != F.algebra->size())
        raise("ShapeMismatch", "filter mask length differs from algebra size");
}

} // namespace

bool is_filter(const filter& F) {
    check_filter_shape(F);
    const bool_algebra& B = *F.algebra;
    if (!F.members[B.one()] || F.members[B.zero()]) return false;
    for (std::size_t a = 0; a < B.size(); ++a) {
        if (!F.members[a]) continue;
        for (std::size_t b = 0; b < B.size(); ++b) {
            if (F.members[b] && !F.members[B.meet(a, b)]) return false;  // meet closure
            if (B.leq(a, b) && !F.members[b]) return false;              // upward closure
        }
    }
    return true;
}

filter filter_from_members(algebra_ref B, std::vector<bool> members) {
    filter F{std::move(B), std::move(members)};
    if (!is_filter(F))
        raise("NotAFilter", "membership mask violates the filter axioms");
    return F;
}

filter filter_generated(const algebra_ref& B, const std::vector<elem>& seed) {
    const bool_algebra& A = *B;
    elem m = A.one();
    for (elem s : seed) {
        if (s >= A.size()) raise("ShapeMismatch", "seed element out of range");
        m = A.meet(m, s);
    }
    if (m == A.zero())
        raise("NotProper", "seed meets to 0; no proper filter contains it");
    filter F{B, std::vector<bool>(A.size(), false)};
    for (std::size_t b = 0; b < A.size(); ++b)
        if (A.leq(m, b)) F.members[b] = true;
    return F;
}

elem filter_minimum(const filter& F) {
    check_filter_shape(F);
    const bool_algebra& B = *F.algebra;
    elem m = B.one();
    for (std::size_t a = 0; a < B.size(); ++a)
        if (F.members[a]) m = B.meet(m, a);
    return m;
}

bool is_ultrafilter(const filter& F) {
    check_filter_shape(F);
    const bool_algebra& B = *F.algebra;
    for (std::size_t a = 0; a < B.size(); ++a)
        if (F.members[a] == F.members[B.neg(a)]) return false;
    return true;
}

ultrafilter principal_ultrafilter(const algebra_ref& B, elem atom) {
    const bool_algebra& A = *B;
    if (atom >= A.size()) raise("ShapeMismatch", "atom index out of range");
    filter F{B, std::vector<bool>(A.size(), false)};
    for (std::size_t b = 0; b < A.size(); ++b)
        if (A.leq(atom, b)) F.members[b] = true;
    return ultrafilter{std::move(F), atom};
}

ultrafilter extend_to_ultrafilter(const filter& F) {
    const elem m = filter_minimum(F);
    const bool_algebra& B = *F.algebra;
    if (m == B.zero())
        raise("NotProper", "filter contains 0");
    // Lowest-index atom below the minimum; ascending scan makes the choice
    // deterministic where Zorn leaves it free.
    for (elem a : atoms_of(B).atoms)
        if (B.leq(a, m)) return principal_ultrafilter(F.algebra, a);
    raise("NotProper", "no atom below the filter minimum");  // unreachable on valid algebras
}

std::vector<ultrafilter> enumerate_ultrafilters(const algebra_ref& B) {
    std::vector<ultrafilter> out;
    for (elem a : atoms_of(*B).atoms)
        out.push_back(principal_ultrafilter(B, a));
    return out;
}

bool_hom ultrafilter_to_hom(const ultrafilter& U) {
    check_filter_shape(U.base);
    bool_hom v;
    v.source = U.base.algebra;
    v.target = two_algebra();
    v.map.resize(U.base.algebra->size());
    for (std::size_t a = 0; a < v.map.size(); ++a)
        v.map[a] = U.base.members[a] ? 1 : 0;
    return v;
}

ultrafilter hom_to_ultrafilter(const bool_hom& v) {
    if (!v.target || !(*v.target == *two_algebra()))
        raise("NotAHom", "target is not the two-element algebra");
    if (!check_hom(v))
        raise("NotAHom", "map does not preserve the Boolean operations");
    filter F{v.source, std::vector<bool>(v.map.size(), false)};
    for (std::size_t a = 0; a < v.map.size(); ++a)
        if (v.map[a] == 1) F.members[a] = true;
    const elem m = filter_minimum(F);
    return ultrafilter{std::move(F), m};
}

} // namespace stonekit
