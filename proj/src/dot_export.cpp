#include "stonekit/dot_export.hpp"

#include "stonekit/profinite.hpp"

#include <sstream>

namespace stonekit::io {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string atom_set_label(std::uint32_t mask) {
    std::string out = "{";
    bool first = true;
    for (unsigned i = 0; i < 32; ++i)
        if (mask >> i & 1) {
            if (!first) out += ",";
            out += std::to_string(i + 1);
            first = false;
        }
    return out + "}";
}

} // namespace

std::string hasse_dot(const finite_poset& x, const std::vector<std::string>& labels,
                      const std::string& caption) {
    if (labels.size() != x.size)
        raise("ShapeMismatch", "need one label per point");
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=\"BT\";\n  node [shape=circle];\n";
    if (!caption.empty()) out << "  label=" << quoted(caption) << ";\n";
    for (std::size_t i = 0; i < x.size; ++i)
        out << "  p" << i << " [label=" << quoted(labels[i]) << "];\n";
    for (std::size_t i = 0; i < x.size; ++i)
        for (std::size_t j = 0; j < x.size; ++j) {
            if (i == j || !x.leq(i, j)) continue;
            bool covering = true;
            for (std::size_t k = 0; covering && k < x.size; ++k)
                if (k != i && k != j && x.leq(i, k) && x.leq(k, j)) covering = false;
            if (covering) out << "  p" << i << " -> p" << j << ";\n";
        }
    out << "}\n";
    return out.str();
}

std::string padic_tree_dot(unsigned p, unsigned depth) {
    if (!is_prime(p))
        raise("NotPrime", std::to_string(p) + " is not prime");
    std::uint64_t count = 1;
    for (unsigned k = 0; k < depth; ++k) {
        count *= p;
        if (count > (std::uint64_t{1} << 16))
            raise("SizeLimit", "more than 2^16 leaves");
    }

    std::ostringstream out;
    out << "digraph padic_tree {\n  node [shape=box];\n";
    out << "  b0_0 [label=\"Z_" << p << "\"];\n";
    std::uint64_t level_count = 1;
    for (unsigned k = 1; k <= depth; ++k) {
        level_count *= p;
        for (std::uint64_t r = 0; r < level_count; ++r)
            out << "  b" << k << "_" << r << " [label=\"" << r << " mod " << p << "^"
                << k << "\"];\n";
        for (std::uint64_t r = 0; r < level_count; ++r)
            out << "  b" << k - 1 << "_" << r % (level_count / p) << " -> b" << k << "_"
                << r << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string duality_dict_dot(const bool_algebra& b) {
    const auto basis = atoms_of(b);
    std::ostringstream out;
    out << "digraph duality_dict {\n  dict [shape=plaintext, label=<\n";
    out << "    <table border=\"0\" cellborder=\"1\" cellspacing=\"0\">\n";
    out << "      <tr><td>element</td><td>clopen</td></tr>\n";
    for (std::size_t e = 0; e < b.size(); ++e) {
        const auto mask = basis.mask_of[e];
        std::string points = "{";
        bool first = true;
        for (unsigned i = 0; i < 32; ++i)
            if (mask >> i & 1) {
                if (!first) points += ",";
                points += "U" + std::to_string(i + 1);
                first = false;
            }
        points += "}";
        out << "      <tr><td>" << atom_set_label(mask) << "</td><td>" << points
            << "</td></tr>\n";
    }
    out << "    </table>>];\n}\n";
    return out.str();
}

} // namespace stonekit::io
