#pragma once

#include "stonekit/alexandrov.hpp"
#include "stonekit/bool_algebra.hpp"

#include <string>
#include <vector>

namespace stonekit::io {

// Hasse diagram of the poset: one node per point, one edge per covering
// pair, drawn upward. An optional caption becomes the graph label.
std::string hasse_dot(const finite_poset& x, const std::vector<std::string>& labels,
                      const std::string& caption = "");

// The ball tree of the p-adic integers down to the given depth: the root
// is the whole space and the nodes at depth k are the residues mod p^k,
// so the graph has 1 + p + ... + p^depth nodes.
std::string padic_tree_dot(unsigned p, unsigned depth);

// Two-column dictionary between the elements of an algebra, written as
// sets of atom ordinals, and the clopen point sets of its dual space.
std::string duality_dict_dot(const bool_algebra& b);

} // namespace stonekit::io
