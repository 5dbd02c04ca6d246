#include "stonekit/json_io.hpp"

#include <algorithm>
#include <cstdint>

namespace stonekit::io {

namespace {

// Exact-double range; larger residues travel as decimal strings so that
// consumers without big-integer parsers still read the file losslessly.
constexpr std::uint64_t max_plain_number = std::uint64_t{1} << 53;

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        raise("BadInput", e.what());
    }
}

} // namespace

json algebra_to_json(const bool_algebra& b) {
    const raw_tables& t = b.tables();
    json meet = json::array(), join = json::array();
    for (std::size_t a = 0; a < t.size; ++a) {
        json mrow = json::array(), jrow = json::array();
        for (std::size_t c = 0; c < t.size; ++c) {
            mrow.push_back(t.meet[a * t.size + c]);
            jrow.push_back(t.join[a * t.size + c]);
        }
        meet.push_back(std::move(mrow));
        join.push_back(std::move(jrow));
    }
    return {{"size", t.size}, {"zero", t.zero}, {"one", t.one},
            {"meet", std::move(meet)}, {"join", std::move(join)}, {"neg", t.neg}};
}

algebra_ref algebra_from_json(const json& j) {
    return guarded([&]() -> algebra_ref {
        if (j.contains("powerset_of"))
            return powerset_algebra(j.at("powerset_of").get<unsigned>());
        raw_tables t;
        t.size = j.at("size").get<std::size_t>();
        t.zero = j.at("zero").get<elem>();
        t.one = j.at("one").get<elem>();
        const auto& meet = j.at("meet");
        const auto& join = j.at("join");
        if (meet.size() != t.size || join.size() != t.size)
            raise("ShapeMismatch", "operation tables must have one row per element");
        for (std::size_t a = 0; a < t.size; ++a) {
            const auto& mrow = meet.at(a);
            const auto& jrow = join.at(a);
            if (mrow.size() != t.size || jrow.size() != t.size)
                raise("ShapeMismatch", "operation tables must be square");
            for (std::size_t c = 0; c < t.size; ++c) {
                t.meet.push_back(mrow.at(c).get<elem>());
                t.join.push_back(jrow.at(c).get<elem>());
            }
        }
        t.neg = j.at("neg").get<std::vector<elem>>();
        return validate_algebra(t);
    });
}

json filter_to_json(const filter& f) {
    json members = json::array();
    for (std::size_t e = 0; e < f.members.size(); ++e)
        if (f.members[e]) members.push_back(e);
    return {{"algebra", algebra_to_json(*f.algebra)}, {"members", std::move(members)}};
}

filter filter_from_json(const json& j) {
    return guarded([&] {
        auto algebra = algebra_from_json(j.at("algebra"));
        std::vector<bool> members(algebra->size(), false);
        for (const auto& e : j.at("members")) {
            const auto idx = e.get<std::size_t>();
            if (idx >= members.size())
                raise("BadInput", "member index " + std::to_string(idx) +
                                      " is outside the algebra");
            members[idx] = true;
        }
        return filter_from_members(algebra, members);
    });
}

json ultrafilter_to_json(const ultrafilter& u) {
    json out = filter_to_json(u.base);
    out["witness_atom"] = u.witness_atom;
    return out;
}

ultrafilter ultrafilter_from_json(const json& j) {
    return guarded([&] {
        filter base = filter_from_json(j);
        if (!is_ultrafilter(base))
            raise("BadInput", "members form a filter but not an ultrafilter");
        const elem witness = filter_minimum(base);
        if (j.contains("witness_atom") && j.at("witness_atom").get<elem>() != witness)
            raise("BadInput", "witness_atom does not match the filter minimum");
        return ultrafilter{std::move(base), witness};
    });
}

json space_to_json(const finite_space& s) {
    return {{"points", s.points}};
}

finite_space space_from_json(const json& j) {
    return guarded([&] {
        return make_space(j.at("points").get<std::vector<std::string>>());
    });
}

json map_to_json(const continuous_map& f) {
    return {{"assignment", f.assignment}, {"target_size", f.target_size}};
}

continuous_map map_from_json(const json& j) {
    return guarded([&] {
        auto assignment = j.at("assignment").get<std::vector<std::uint32_t>>();
        std::uint32_t inferred = 0;
        for (auto v : assignment) inferred = std::max(inferred, v + 1);
        const auto target = j.contains("target_size")
                                ? j.at("target_size").get<std::size_t>()
                                : inferred;
        const std::size_t source = assignment.size();
        return make_map(source, target, std::move(assignment));
    });
}

json padic_to_json(const padic_int& x) {
    json residues = json::array();
    for (const auto& r : x.residues) {
        if (r < max_plain_number)
            residues.push_back(static_cast<std::uint64_t>(r));
        else
            residues.push_back(r.str());
    }
    return {{"p", x.p}, {"precision", x.precision()}, {"residues", std::move(residues)}};
}

padic_int padic_from_json(const json& j) {
    return guarded([&] {
        const auto p = j.at("p").get<unsigned>();
        if (!is_prime(p))
            raise("NotPrime", std::to_string(p) + " is not prime");
        const auto n = j.at("precision").get<std::size_t>();
        if (n == 0)
            raise("PrecisionZero", "precision must be at least 1");
        padic_int x{p, {}};
        for (const auto& r : j.at("residues")) {
            if (r.is_string())
                x.residues.emplace_back(r.get<std::string>());
            else
                x.residues.emplace_back(r.get<std::uint64_t>());
        }
        if (x.precision() != n)
            raise("BadInput", "precision does not match the residue count");
        big_int pk = 1;
        for (std::size_t k = 0; k < n; ++k) {
            pk *= p;
            if (x.residues[k] < 0 || x.residues[k] >= pk)
                raise("BadInput", "residue at level " + std::to_string(k + 1) +
                                      " is out of range");
            if (k > 0 && x.residues[k] % (pk / p) != x.residues[k - 1])
                raise("BadInput", "residues at levels " + std::to_string(k) + " and " +
                                      std::to_string(k + 1) + " disagree");
        }
        return x;
    });
}

json clopen_to_json(const zp_clopen& a) {
    return {{"p", a.p}, {"level", a.level}, {"members", a.members}};
}

zp_clopen clopen_from_json(const json& j) {
    return guarded([&] {
        return normalize(j.at("p").get<unsigned>(), j.at("level").get<unsigned>(),
                         j.at("members").get<std::vector<std::uint32_t>>());
    });
}

json zhat_to_json(const zhat_element& e) {
    json residues = json::array();
    for (auto [n, r] : e.residues) residues.push_back(json::array({n, r}));
    return {{"residues", std::move(residues)}};
}

zhat_element zhat_from_json(const json& j) {
    return guarded([&] {
        zhat_element e;
        for (const auto& pair : j.at("residues")) {
            if (!pair.is_array() || pair.size() != 2)
                raise("BadInput", "residues must be [modulus, value] pairs");
            const auto n = pair.at(0).get<std::uint64_t>();
            const auto r = pair.at(1).get<std::uint64_t>();
            if (n == 0)
                raise("ShapeMismatch", "moduli must be at least 1");
            if (r >= n)
                raise("BadInput", "residue " + std::to_string(r) +
                                      " is out of range mod " + std::to_string(n));
            e.residues[n] = r;
        }
        for (auto [n, r] : e.residues) {
            for (std::uint64_t d = 1; d * d <= n; ++d) {
                if (n % d != 0) continue;
                for (std::uint64_t div : {d, n / d}) {
                    auto it = e.residues.find(div);
                    if (it == e.residues.end())
                        raise("ModuliNotClosed", "modulus " + std::to_string(n) +
                                                     " is listed but its divisor " +
                                                     std::to_string(div) + " is missing");
                    if (r % div != it->second)
                        raise("BadInput", "residues mod " + std::to_string(n) + " and " +
                                              std::to_string(div) + " disagree");
                }
            }
        }
        return e;
    });
}

json poset_to_json(const finite_poset& x) {
    json leq = json::array();
    for (std::size_t i = 0; i < x.size; ++i) {
        json row = json::array();
        for (std::size_t j2 = 0; j2 < x.size; ++j2) row.push_back(x.leq(i, j2));
        leq.push_back(std::move(row));
    }
    return {{"size", x.size}, {"leq", std::move(leq)}};
}

json poset_to_json(const finite_poset& x, const std::vector<std::string>& labels) {
    json out = poset_to_json(x);
    out["labels"] = labels;
    return out;
}

finite_poset poset_from_json(const json& j) {
    return guarded([&] {
        const auto size = j.at("size").get<std::size_t>();
        std::vector<std::vector<bool>> leq;
        for (const auto& row : j.at("leq"))
            leq.push_back(row.get<std::vector<bool>>());
        return make_poset(size, leq);
    });
}

std::vector<std::string> poset_labels_from_json(const json& j) {
    return guarded([&] {
        const auto size = j.at("size").get<std::size_t>();
        std::vector<std::string> labels;
        if (j.contains("labels")) {
            labels = j.at("labels").get<std::vector<std::string>>();
            if (labels.size() != size)
                raise("BadInput", "labels must name every point exactly once");
        } else {
            for (std::size_t i = 0; i < size; ++i) labels.push_back(std::to_string(i));
        }
        return labels;
    });
}

std::string dumps(const json& j) {
    return j.dump(2) + "\n";
}

json parse(const std::string& text) {
    return guarded([&] { return json::parse(text); });
}

} // namespace stonekit::io
