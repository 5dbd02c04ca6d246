#include "stonekit/clopen_zp.hpp"

#include <algorithm>
#include <string>

namespace stonekit {

namespace {

constexpr std::uint64_t max_balls = std::uint64_t{1} << 16;

std::uint64_t checked_ball_count(unsigned p, unsigned level) {
    std::uint64_t count = 1;
    for (unsigned k = 0; k < level; ++k) {
        count *= p;
        if (count > max_balls)
            raise("SizeLimit", "more than 2^16 balls at level " + std::to_string(level));
    }
    return count;
}

// Membership flags of a at the given level, which must be >= level(a).
std::vector<char> flags_at(const zp_clopen& a, std::uint64_t target_count) {
    const std::uint64_t own_count = checked_ball_count(a.p, a.level);
    std::vector<char> own(own_count, 0);
    for (auto r : a.members) own[r] = 1;
    std::vector<char> out(target_count);
    for (std::uint64_t x = 0; x < target_count; ++x) out[x] = own[x % own_count];
    return out;
}

zp_clopen from_flags(unsigned p, unsigned level, const std::vector<char>& flags) {
    std::vector<std::uint32_t> members;
    for (std::uint64_t x = 0; x < flags.size(); ++x)
        if (flags[x]) members.push_back(static_cast<std::uint32_t>(x));
    return normalize(p, level, std::move(members));
}

template <typename F>
zp_clopen combine(const zp_clopen& a, const zp_clopen& b, F&& op) {
    if (a.p != b.p)
        raise("PrimeMismatch", "operands live over different primes");
    const unsigned level = std::max(a.level, b.level);
    const std::uint64_t count = checked_ball_count(a.p, level);
    auto fa = flags_at(a, count);
    auto fb = flags_at(b, count);
    std::vector<char> out(count);
    for (std::uint64_t x = 0; x < count; ++x) out[x] = op(fa[x], fb[x]);
    return from_flags(a.p, level, out);
}

} // namespace

zp_clopen normalize(unsigned p, unsigned level, std::vector<std::uint32_t> members) {
    if (!is_prime(p))
        raise("NotPrime", std::to_string(p) + " is not prime");
    std::uint64_t count = checked_ball_count(p, level);

    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!members.empty() && members.back() >= count)
        raise("ShapeMismatch", "residue " + std::to_string(members.back()) +
                                   " is out of range mod " + std::to_string(p) + "^" +
                                   std::to_string(level));

    while (level > 0) {
        const std::uint64_t lower = count / p;
        std::vector<std::uint32_t> tally(lower, 0);
        for (auto x : members) ++tally[x % lower];
        bool saturated = true;
        for (auto t : tally)
            if (t != 0 && t != p) {
                saturated = false;
                break;
            }
        if (!saturated) break;
        std::vector<std::uint32_t> parents;
        parents.reserve(members.size() / p);
        for (std::uint32_t r = 0; r < lower; ++r)
            if (tally[r] == p) parents.push_back(r);
        members = std::move(parents);
        count = lower;
        --level;
    }
    return {p, level, std::move(members)};
}

zp_clopen clopen_union(const zp_clopen& a, const zp_clopen& b) {
    return combine(a, b, [](char x, char y) { return char(x || y); });
}

zp_clopen clopen_intersection(const zp_clopen& a, const zp_clopen& b) {
    return combine(a, b, [](char x, char y) { return char(x && y); });
}

zp_clopen clopen_complement(const zp_clopen& a) {
    const std::uint64_t count = checked_ball_count(a.p, a.level);
    std::vector<char> flags = flags_at(a, count);
    for (auto& f : flags) f = !f;
    return from_flags(a.p, a.level, flags);
}

bool clopen_member(const padic_int& x, const zp_clopen& a) {
    if (x.p != a.p)
        raise("PrimeMismatch", "point and clopen live over different primes");
    if (a.level == 0) return !a.members.empty();
    if (x.precision() < a.level)
        raise("InsufficientPrecision", "deciding membership needs " +
                                           std::to_string(a.level) + " residues, have " +
                                           std::to_string(x.precision()));
    const auto r = static_cast<std::uint32_t>(x.residues[a.level - 1]);
    return std::binary_search(a.members.begin(), a.members.end(), r);
}

algebra_ref level_algebra::algebra() const {
    return powerset_algebra(ball_count);
}

level_algebra make_level_algebra(unsigned p, unsigned n) {
    if (!is_prime(p))
        raise("NotPrime", std::to_string(p) + " is not prime");
    const std::uint64_t count = checked_ball_count(p, n);
    return {p, n, static_cast<std::uint32_t>(count)};
}

bool_hom level_inclusion(unsigned p, unsigned n) {
    const auto coarse = make_level_algebra(p, n);
    const auto fine = make_level_algebra(p, n + 1);
    auto src = coarse.algebra();
    auto dst = fine.algebra();
    bool_hom h{src, dst, std::vector<elem>(src->size())};
    for (std::size_t s = 0; s < src->size(); ++s) {
        std::size_t image = 0;
        for (std::uint32_t x = 0; x < fine.ball_count; ++x)
            if (s >> (x % coarse.ball_count) & 1) image |= std::size_t{1} << x;
        h.map[s] = static_cast<elem>(image);
    }
    return h;
}

zp_clopen granule_operator(const level_algebra& b0, const zp_clopen& e) {
    if (b0.p != e.p)
        raise("PrimeMismatch", "granules and clopen live over different primes");
    std::vector<std::uint32_t> kept;
    if (e.level <= b0.level) {
        // Each ball of b0 sits inside a single ball of e's level, so it is
        // contained in e exactly when its prefix is a member.
        const std::uint64_t e_count = checked_ball_count(e.p, e.level);
        std::vector<char> in(e_count, 0);
        for (auto r : e.members) in[r] = 1;
        for (std::uint32_t a = 0; a < b0.ball_count; ++a)
            if (in[a % e_count]) kept.push_back(a);
    } else {
        // e is finer: a ball of b0 is contained in e exactly when all of
        // its refinements at e's level are members.
        const std::uint64_t per_ball = checked_ball_count(e.p, e.level) / b0.ball_count;
        std::vector<std::uint64_t> hit(b0.ball_count, 0);
        for (auto r : e.members) ++hit[r % b0.ball_count];
        for (std::uint32_t a = 0; a < b0.ball_count; ++a)
            if (hit[a] == per_ball) kept.push_back(a);
    }
    return normalize(b0.p, b0.level, std::move(kept));
}

} // namespace stonekit
