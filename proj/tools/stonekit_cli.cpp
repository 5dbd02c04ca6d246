#include <CLI11.hpp>

#include "stonekit/alexandrov.hpp"
#include "stonekit/bool_algebra.hpp"
#include "stonekit/clopen_zp.hpp"
#include "stonekit/dot_export.hpp"
#include "stonekit/errors.hpp"
#include "stonekit/filters.hpp"
#include "stonekit/json_io.hpp"
#include "stonekit/laws.hpp"
#include "stonekit/profinite.hpp"
#include "stonekit/stone_space.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using namespace stonekit;
using stonekit::io::json;

namespace {

// --max-size guard, 0 = library limits only.  One command runs per process,
// so a single slot is enough.
std::size_t g_max_size = 0;
int g_exit = 0;

void enforce_max(std::size_t actual, const std::string& what) {
    if (g_max_size > 0 && actual > g_max_size)
        raise("SizeLimit", what + " has size " + std::to_string(actual) +
                               ", above --max-size " + std::to_string(g_max_size));
}

// Inputs are file paths, or inline JSON when the value starts with '{'.
json load_json(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return io::parse(arg);
    std::ifstream in(arg);
    if (!in) raise("BadInput", "cannot open " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    return io::parse(buf.str());
}

void emit(const json& j) { std::cout << io::dumps(j); }

[[noreturn]] void no_view(const std::string& format) {
    raise("UnsupportedKind", "no " + format + " view for this command");
}

// ---------------------------------------------------------------------------
// Rendering helpers
// ---------------------------------------------------------------------------

std::vector<std::string> atom_labels(const atom_basis& basis, std::size_t e) {
    std::vector<std::string> out;
    const std::uint32_t mask = basis.mask_of[e];
    for (unsigned i = 0; i < 32; ++i)
        if (mask >> i & 1) out.push_back(std::to_string(i + 1));
    return out;
}

std::string set_text(const std::vector<std::string>& labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ",";
        out += labels[i];
    }
    return out + "}";
}

std::vector<std::string> mask_labels(std::uint64_t mask,
                                     const std::vector<std::string>& labels) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (mask >> i & 1) out.push_back(labels[i]);
    return out;
}

std::string map_text(const continuous_map& f) {
    std::string out = "assignment [";
    for (std::size_t i = 0; i < f.assignment.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(f.assignment[i]);
    }
    return out + "] target " + std::to_string(f.target_size);
}

std::string residues_text(const padic_int& x) {
    std::string out = "residues [";
    for (std::size_t k = 0; k < x.residues.size(); ++k) {
        if (k) out += ",";
        out += x.residues[k].str();
    }
    return out + "]";
}

std::string clopen_text(const zp_clopen& a) {
    if (a.members.empty()) return "{}";
    if (a.level == 0) return "Z_" + std::to_string(a.p);
    std::uint64_t pn = 1;
    for (unsigned i = 0; i < a.level; ++i) pn *= a.p;
    std::string out = "{";
    for (std::size_t i = 0; i < a.members.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(a.members[i]) + " + " + std::to_string(pn) + " Z_" +
               std::to_string(a.p);
    }
    return out + "}";
}

std::uint64_t checked_power(std::uint64_t base, unsigned exp) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (out > (std::uint64_t{1} << 60) / base)
            raise("SizeLimit", "power overflows the size guard");
        out *= base;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Shared option bundles
// ---------------------------------------------------------------------------

// Algebra input: exactly one of a JSON object, a powerset size, or a cyclic
// ring modulus.
struct algebra_source {
    std::string input;
    unsigned powerset = 0;
    long long idempotent = 0;
    CLI::Option* from_input = nullptr;
    CLI::Option* from_powerset = nullptr;

    void attach(CLI::App* cmd) {
        auto* grp = cmd->add_option_group("source");
        from_input = grp->add_option("--input", input, "algebra JSON (path or inline)");
        from_powerset =
            grp->add_option("--powerset", powerset, "powerset algebra on k atoms");
        grp->add_option("--idempotent", idempotent, "idempotent algebra of Z/n");
        grp->require_option(1);
    }

    algebra_ref load() const {
        algebra_ref B;
        if (from_input->count() > 0)
            B = io::algebra_from_json(load_json(input));
        else if (from_powerset->count() > 0)
            B = powerset_algebra(powerset);
        else
            B = idempotent_algebra(idempotent);
        enforce_max(B->size(), "algebra");
        return B;
    }
};

struct poset_source {
    std::string input;

    void attach(CLI::App* cmd) {
        cmd->add_option("--poset", input, "poset JSON (path or inline)")->required();
    }

    std::pair<finite_poset, std::vector<std::string>> load() const {
        json j = load_json(input);
        finite_poset x = io::poset_from_json(j);
        enforce_max(x.size, "poset");
        return {std::move(x), io::poset_labels_from_json(j)};
    }
};

std::string* add_format(CLI::App* cmd) {
    auto fmt = std::make_shared<std::string>("text");
    cmd->add_option("--format", *fmt, "output format")
        ->check(CLI::IsMember({"text", "json", "dot"}))
        ->capture_default_str();
    // Keep the string alive for the whole run.
    static std::vector<std::shared_ptr<std::string>> keep;
    keep.push_back(fmt);
    return fmt.get();
}

// ---------------------------------------------------------------------------
// Subcommand wiring
// ---------------------------------------------------------------------------

void setup_algebra(CLI::App& app) {
    auto* algebra = app.add_subcommand("algebra", "Boolean algebra operations");
    algebra->require_subcommand(1);
    algebra->fallthrough();

    {
        auto* cmd = algebra->add_subcommand("validate", "check the Boolean axioms");
        cmd->fallthrough();
        auto src = std::make_shared<algebra_source>();
        src->attach(cmd);
        auto* fmt = add_format(cmd);
        cmd->callback([src, fmt] {
            algebra_ref B = src->load();
            const auto atoms = atoms_of(*B).atoms.size();
            if (*fmt == "json")
                emit(io::algebra_to_json(*B));
            else if (*fmt == "text")
                std::cout << "valid Boolean algebra: " << B->size() << " elements, "
                          << atoms << " atoms\n";
            else
                no_view(*fmt);
        });
    }
    {
        auto* cmd = algebra->add_subcommand("atoms", "list the atoms");
        cmd->fallthrough();
        auto src = std::make_shared<algebra_source>();
        src->attach(cmd);
        auto* fmt = add_format(cmd);
        cmd->callback([src, fmt] {
            algebra_ref B = src->load();
            const atom_basis basis = atoms_of(*B);
            if (*fmt == "json") {
                json out = json::array();
                for (elem a : basis.atoms) out.push_back(atom_labels(basis, a));
                emit(json{{"atoms", std::move(out)}});
            } else if (*fmt == "text") {
                std::cout << "atoms:";
                for (elem a : basis.atoms) std::cout << " " << set_text(atom_labels(basis, a));
                std::cout << "\n";
            } else {
                no_view(*fmt);
            }
        });
    }
    {
        auto* cmd = algebra->add_subcommand("ultrafilters", "enumerate the ultrafilters");
        cmd->fallthrough();
        auto src = std::make_shared<algebra_source>();
        src->attach(cmd);
        auto* fmt = add_format(cmd);
        cmd->callback([src, fmt] {
            algebra_ref B = src->load();
            const atom_basis basis = atoms_of(*B);
            auto ultras = enumerate_ultrafilters(B);
            if (*fmt == "json") {
                json out = json::array();
                for (const auto& u : ultras) out.push_back(io::ultrafilter_to_json(u));
                emit(json{{"ultrafilters", std::move(out)}});
            } else if (*fmt == "text") {
                std::cout << ultras.size() << " ultrafilters\n";
                for (const auto& u : ultras) {
                    std::size_t count = 0;
                    for (bool b : u.base.members) count += b;
                    std::cout << "at atom " << set_text(atom_labels(basis, u.witness_atom))
                              << ": " << count << " members\n";
                }
            } else {
                no_view(*fmt);
            }
        });
    }
    {
        auto* cmd = algebra->add_subcommand(
            "granules", "atoms of the subalgebra generated by --gens");
        cmd->fallthrough();
        auto src = std::make_shared<algebra_source>();
        src->attach(cmd);
        auto gens = std::make_shared<std::vector<unsigned>>();
        cmd->add_option("--gens", *gens, "generator element indices")->delimiter(',');
        auto* fmt = add_format(cmd);
        cmd->callback([src, gens, fmt] {
            algebra_ref B = src->load();
            const atom_basis basis = atoms_of(*B);
            std::vector<elem> picked;
            for (unsigned g : *gens) {
                if (g >= B->size())
                    raise("ShapeMismatch",
                          "generator index " + std::to_string(g) + " is out of range");
                picked.push_back(static_cast<elem>(g));
            }
            subalgebra sub = subalgebra_generated(B, picked);
            if (*fmt == "json") {
                json out = json::array();
                for (elem g : sub.granules) out.push_back(atom_labels(basis, g));
                emit(json{{"granules", std::move(out)}});
            } else if (*fmt == "text") {
                std::cout << "granules:";
                for (elem g : sub.granules)
                    std::cout << " " << set_text(atom_labels(basis, g));
                std::cout << "\n";
            } else {
                no_view(*fmt);
            }
        });
    }
}

void setup_stone(CLI::App& app) {
    auto* stone = app.add_subcommand("stone", "Stone space and duality operations");
    stone->require_subcommand(1);
    stone->fallthrough();

    {
        auto* cmd = stone->add_subcommand("dualize", "Stone space of an algebra");
        cmd->fallthrough();
        auto src = std::make_shared<algebra_source>();
        src->attach(cmd);
        auto* fmt = add_format(cmd);
        cmd->callback([src, fmt] {
            algebra_ref B = src->load();
            stone_space X = make_stone_space(B);
            std::vector<std::string> labels;
            for (std::size_t i = 0; i < X.points.size(); ++i)
                labels.push_back("U" + std::to_string(i + 1));
            if (*fmt == "json") {
                emit(io::space_to_json(make_space(labels)));
            } else if (*fmt == "text") {
                std::cout << "Stone space with " << labels.size() << " points:";
                for (const auto& l : labels) std::cout << " " << l;
                std::cout << "\n";
            } else {
                std::cout << io::duality_dict_dot(*B);
            }
        });
    }
    {
        auto* cmd = stone->add_subcommand("eta", "representation map into clop(X_B)");
        cmd->fallthrough();
        auto src = std::make_shared<algebra_source>();
        src->attach(cmd);
        auto* fmt = add_format(cmd);
        cmd->callback([src, fmt] {
            algebra_ref B = src->load();
            bool_hom h = eta(B);
            std::vector<std::uint32_t> assignment(h.map.begin(), h.map.end());
            continuous_map as_map = make_map(B->size(), h.target->size(), assignment);
            if (*fmt == "json")
                emit(io::map_to_json(as_map));
            else if (*fmt == "text")
                std::cout << "eta bijective on " << B->size() << " elements: "
                          << map_text(as_map) << "\n";
            else
                no_view(*fmt);
        });
    }
    {
        auto* cmd = stone->add_subcommand("phi", "canonical map X -> X_clop(X)");
        cmd->fallthrough();
        auto input = std::make_shared<std::string>();
        auto points = std::make_shared<std::size_t>(0);
        auto* grp = cmd->add_option_group("space");
        auto* by_input = grp->add_option("--input", *input, "space JSON (path or inline)");
        grp->add_option("--points", *points, "discrete space with n points");
        grp->require_option(1);
        auto* fmt = add_format(cmd);
        cmd->callback([input, points, by_input, fmt] {
            finite_space S = by_input->count() > 0
                                 ? io::space_from_json(load_json(*input))
                                 : discrete_space(*points);
            enforce_max(S.points.size(), "space");
            continuous_map f = phi(S);
            if (*fmt == "json")
                emit(io::map_to_json(f));
            else if (*fmt == "text")
                std::cout << "phi bijective on " << S.points.size()
                          << " points: " << map_text(f) << "\n";
            else
                no_view(*fmt);
        });
    }
    {
        auto* cmd = stone->add_subcommand("lift", "lift g through a surjection f");
        cmd->fallthrough();
        auto fj = std::make_shared<std::string>();
        auto gj = std::make_shared<std::string>();
        cmd->add_option("--surjection", *fj, "map JSON for f: X ->> Y")->required();
        cmd->add_option("--map", *gj, "map JSON for g: P -> Y")->required();
        auto* fmt = add_format(cmd);
        cmd->callback([fj, gj, fmt] {
            continuous_map f = io::map_from_json(load_json(*fj));
            continuous_map g = io::map_from_json(load_json(*gj));
            enforce_max(f.source_size, "map source");
            continuous_map h = gleason_lift(f, g);
            if (*fmt == "json")
                emit(io::map_to_json(h));
            else if (*fmt == "text")
                std::cout << "lift: " << map_text(h) << "\n";
            else
                no_view(*fmt);
        });
    }
}

void setup_padic(CLI::App& app) {
    auto* padic = app.add_subcommand("padic", "p-adic integer operations");
    padic->require_subcommand(1);
    padic->fallthrough();

    for (const char* op : {"add", "mul"}) {
        auto* cmd = padic->add_subcommand(op, std::string("p-adic ") + op);
        cmd->fallthrough();
        auto p = std::make_shared<unsigned>(2);
        auto n = std::make_shared<std::size_t>(1);
        auto x = std::make_shared<long long>(0);
        auto y = std::make_shared<long long>(0);
        cmd->add_option("--p", *p, "prime")->required();
        cmd->add_option("--n", *n, "precision (number of levels)")->required();
        cmd->add_option("--x", *x, "left integer operand")->required();
        cmd->add_option("--y", *y, "right integer operand")->required();
        auto* fmt = add_format(cmd);
        const bool is_add = std::string(op) == "add";
        cmd->callback([p, n, x, y, fmt, is_add] {
            enforce_max(*n, "precision");
            padic_int a = padic_from_int(*p, *x, *n);
            padic_int b = padic_from_int(*p, *y, *n);
            padic_int r = is_add ? padic_add(a, b) : padic_mul(a, b);
            if (*fmt == "json")
                emit(io::padic_to_json(r));
            else if (*fmt == "text")
                std::cout << residues_text(r) << "\n";
            else
                no_view(*fmt);
        });
    }
    {
        auto* cmd = padic->add_subcommand("digits", "Cantor digit string of a 2-adic");
        cmd->fallthrough();
        auto p = std::make_shared<unsigned>(2);
        auto n = std::make_shared<std::size_t>(1);
        auto x = std::make_shared<long long>(0);
        cmd->add_option("--p", *p, "prime (the encoding needs 2)")->capture_default_str();
        cmd->add_option("--n", *n, "precision (number of digits)")->required();
        cmd->add_option("--x", *x, "integer to encode")->required();
        auto* fmt = add_format(cmd);
        cmd->callback([p, n, x, fmt] {
            enforce_max(*n, "precision");
            padic_int a = padic_from_int(*p, *x, *n);
            std::vector<int> bits = cantor_digits(a);
            if (*fmt == "json") {
                json out = io::padic_to_json(a);
                out["digits"] = bits;
                emit(out);
            } else if (*fmt == "text") {
                std::cout << "digits ";
                for (int b : bits) std::cout << b;
                std::cout << "\n";
            } else {
                no_view(*fmt);
            }
        });
    }
    {
        auto* cmd = padic->add_subcommand("tree", "ball tree of Z_p down to a depth");
        cmd->fallthrough();
        auto p = std::make_shared<unsigned>(2);
        auto depth = std::make_shared<unsigned>(1);
        cmd->add_option("--p", *p, "prime")->required();
        cmd->add_option("--depth", *depth, "levels below the root")->required();
        auto* fmt = add_format(cmd);
        cmd->callback([p, depth, fmt] {
            enforce_max(checked_power(*p, *depth), "leaf count");
            if (*fmt == "dot") {
                std::cout << io::padic_tree_dot(*p, *depth);
            } else if (*fmt == "text") {
                const std::string dot = io::padic_tree_dot(*p, *depth);
                std::uint64_t nodes = 0;
                std::uint64_t level = 1;
                for (unsigned k = 0; k <= *depth; ++k, level *= *p) nodes += level;
                std::cout << "p-adic ball tree: depth " << *depth << ", " << nodes
                          << " nodes, " << nodes - 1 << " edges\n";
            } else {
                no_view(*fmt);
            }
        });
    }
}

void setup_zhat(CLI::App& app) {
    auto* zhat = app.add_subcommand("zhat", "profinite completion of the integers");
    zhat->require_subcommand(1);
    zhat->fallthrough();

    auto* cmd = zhat->add_subcommand("embed", "embed an integer at chosen moduli");
    cmd->fallthrough();
    auto z = std::make_shared<long long>(0);
    auto moduli = std::make_shared<std::vector<std::uint64_t>>();
    auto close = std::make_shared<bool>(false);
    cmd->add_option("--z", *z, "integer to embed")->required();
    cmd->add_option("--moduli", *moduli, "divisibility-closed modulus list")
        ->required()
        ->delimiter(',');
    cmd->add_flag("--close", *close, "extend the list with all divisors");
    auto* fmt = add_format(cmd);
    cmd->callback([z, moduli, close, fmt] {
        std::vector<std::uint64_t> ms = *moduli;
        if (*close) {
            std::vector<std::uint64_t> extended;
            for (std::uint64_t n : ms) {
                if (n == 0) raise("ShapeMismatch", "moduli must be at least 1");
                for (std::uint64_t d = 1; d <= n; ++d)
                    if (n % d == 0) extended.push_back(d);
            }
            std::sort(extended.begin(), extended.end());
            extended.erase(std::unique(extended.begin(), extended.end()), extended.end());
            ms = std::move(extended);
        }
        enforce_max(ms.size(), "modulus list");
        zhat_element e = zhat_from_int(*z, ms);
        if (*fmt == "json") {
            emit(io::zhat_to_json(e));
        } else if (*fmt == "text") {
            std::cout << "residues ";
            bool first = true;
            for (auto [n, r] : e.residues) {
                if (!first) std::cout << ", ";
                std::cout << r << " mod " << n;
                first = false;
            }
            std::cout << "\n";
        } else {
            no_view(*fmt);
        }
    });
}

void setup_clopen(CLI::App& app) {
    auto* clopen = app.add_subcommand("clopen", "clopen subsets of Z_p");
    clopen->require_subcommand(1);
    clopen->fallthrough();

    {
        auto* cmd = clopen->add_subcommand("op", "union, intersection or complement");
        cmd->fallthrough();
        auto op = std::make_shared<std::string>();
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        cmd->add_option("--op", *op, "operation")
            ->required()
            ->check(CLI::IsMember({"union", "intersection", "complement"}));
        cmd->add_option("--a", *a, "clopen JSON (path or inline)")->required();
        auto* second = cmd->add_option("--b", *b, "clopen JSON (path or inline)");
        auto* fmt = add_format(cmd);
        cmd->callback([op, a, b, second, fmt] {
            const bool unary = *op == "complement";
            if (unary && second->count() > 0)
                throw CLI::ValidationError("--b", "complement takes only --a");
            if (!unary && second->count() == 0)
                throw CLI::ValidationError("--b", *op + " needs --b");
            zp_clopen lhs = io::clopen_from_json(load_json(*a));
            enforce_max(checked_power(lhs.p, lhs.level), "ball count");
            zp_clopen out;
            if (unary) {
                out = clopen_complement(lhs);
            } else {
                zp_clopen rhs = io::clopen_from_json(load_json(*b));
                enforce_max(checked_power(rhs.p, rhs.level), "ball count");
                out = *op == "union" ? clopen_union(lhs, rhs)
                                     : clopen_intersection(lhs, rhs);
            }
            if (*fmt == "json")
                emit(io::clopen_to_json(out));
            else if (*fmt == "text")
                std::cout << clopen_text(out) << "\n";
            else
                no_view(*fmt);
        });
    }
    {
        auto* cmd = clopen->add_subcommand(
            "granule", "level-n ball approximation from inside");
        cmd->fallthrough();
        auto p = std::make_shared<unsigned>(2);
        auto level = std::make_shared<unsigned>(0);
        auto e = std::make_shared<std::string>();
        cmd->add_option("--p", *p, "prime of the level algebra")->required();
        cmd->add_option("--level", *level, "level n of the ball algebra")->required();
        cmd->add_option("--set", *e, "clopen JSON (path or inline)")->required();
        auto* fmt = add_format(cmd);
        cmd->callback([p, level, e, fmt] {
            enforce_max(checked_power(*p, *level), "ball count");
            level_algebra b0 = make_level_algebra(*p, *level);
            zp_clopen in = io::clopen_from_json(load_json(*e));
            zp_clopen out = granule_operator(b0, in);
            if (*fmt == "json")
                emit(io::clopen_to_json(out));
            else if (*fmt == "text")
                std::cout << clopen_text(out) << "\n";
            else
                no_view(*fmt);
        });
    }
}

void setup_ro(CLI::App& app) {
    auto* ro = app.add_subcommand("ro", "regular-open analysis of finite posets");
    ro->require_subcommand(1);
    ro->fallthrough();

    {
        auto* cmd = ro->add_subcommand("analyze", "regular opens, clopens, ED verdict");
        cmd->fallthrough();
        auto src = std::make_shared<poset_source>();
        src->attach(cmd);
        auto* fmt = add_format(cmd);
        cmd->callback([src, fmt] {
            auto [x, labels] = src->load();
            subset_algebra reg = ro_algebra(x);
            subset_algebra cl = clopens(x);
            ed_report rep = is_ED(x);
            if (*fmt == "json") {
                json ros = json::array(), cls = json::array();
                for (std::uint64_t u : reg.carrier) ros.push_back(mask_labels(u, labels));
                for (std::uint64_t u : cl.carrier) cls.push_back(mask_labels(u, labels));
                emit(json{{"points", labels},
                          {"regular_opens", std::move(ros)},
                          {"clopens", std::move(cls)},
                          {"ed", rep.ed}});
            } else if (*fmt == "text") {
                std::cout << "points:";
                for (const auto& l : labels) std::cout << " " << l;
                std::cout << "\nregular opens:";
                for (std::uint64_t u : reg.carrier)
                    std::cout << " " << set_text(mask_labels(u, labels));
                std::cout << "\nclopens:";
                for (std::uint64_t u : cl.carrier)
                    std::cout << " " << set_text(mask_labels(u, labels));
                std::cout << "\n" << (rep.ed ? "ED" : "not ED") << "\n";
            } else {
                std::cout << io::hasse_dot(x, labels);
            }
        });
    }
    {
        auto* cmd = ro->add_subcommand("ed-check", "extremal disconnectedness verdict");
        cmd->fallthrough();
        auto src = std::make_shared<poset_source>();
        src->attach(cmd);
        auto* fmt = add_format(cmd);
        cmd->callback([src, fmt] {
            auto [x, labels] = src->load();
            ed_report rep = is_ED(x);
            if (*fmt == "json") {
                json out{{"ed", rep.ed}};
                if (!rep.ed) out["witness"] = mask_labels(rep.witness, labels);
                emit(out);
            } else if (*fmt == "text") {
                if (rep.ed)
                    std::cout << "ED\n";
                else
                    std::cout << "not ED; witness open "
                              << set_text(mask_labels(rep.witness, labels)) << "\n";
            } else {
                no_view(*fmt);
            }
        });
    }
}

void setup_laws(CLI::App& app) {
    auto* lawsgrp = app.add_subcommand("laws", "property suites for every module");
    lawsgrp->require_subcommand(1);
    lawsgrp->fallthrough();

    auto* cmd = lawsgrp->add_subcommand("run", "run the whole law catalogue");
    cmd->fallthrough();
    auto seed = std::make_shared<std::uint64_t>(0);
    auto sequential = std::make_shared<bool>(false);
    cmd->add_option("--seed", *seed, "seed for the randomized checks")
        ->capture_default_str();
    cmd->add_flag("--sequential", *sequential, "run laws one at a time");
    auto* fmt = add_format(cmd);
    cmd->callback([seed, sequential, fmt] {
        if (*fmt == "dot") no_view(*fmt);
        auto results = laws::run_all(*seed, !*sequential);
        std::size_t passed = 0;
        for (const auto& r : results) passed += r.passed;
        if (*fmt == "json") {
            json list = json::array();
            for (const auto& r : results)
                list.push_back(
                    json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
            emit(json{{"all_passed", passed == results.size()},
                      {"laws", std::move(list)}});
        } else {
            for (const auto& r : results)
                std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": "
                          << r.detail << "\n";
            std::cout << passed << "/" << results.size() << " laws hold\n";
        }
        if (passed != results.size()) {
            std::cerr << "LawsFailed: " << results.size() - passed
                      << " law(s) failed\n";
            g_exit = 1;
        }
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"stonekit: exact Stone duality toolkit for finite and profinite structures"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--max-size", g_max_size,
                   "refuse inputs whose size exceeds this bound (0 = library limits)");

    setup_algebra(app);
    setup_stone(app);
    setup_padic(app);
    setup_zhat(app);
    setup_clopen(app);
    setup_ro(app);
    setup_laws(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const domain_error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 1;
    }
    return g_exit;
}
