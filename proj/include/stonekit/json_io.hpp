#pragma once

#include "stonekit/alexandrov.hpp"
#include "stonekit/bool_algebra.hpp"
#include "stonekit/clopen_zp.hpp"
#include "stonekit/filters.hpp"
#include "stonekit/profinite.hpp"
#include "stonekit/stone_space.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace stonekit::io {

using json = nlohmann::json;

// Loaders validate through the module factories, so malformed data raises
// the factory's own error; structurally broken JSON raises BadInput. Keys
// are emitted in sorted order, making every dump canonical.

json algebra_to_json(const bool_algebra& b);
algebra_ref algebra_from_json(const json& j);

json filter_to_json(const filter& f);
filter filter_from_json(const json& j);

json ultrafilter_to_json(const ultrafilter& u);
ultrafilter ultrafilter_from_json(const json& j);

json space_to_json(const finite_space& s);
finite_space space_from_json(const json& j);

json map_to_json(const continuous_map& f);
continuous_map map_from_json(const json& j);

// Residues that exceed exact double range travel as decimal strings.
json padic_to_json(const padic_int& x);
padic_int padic_from_json(const json& j);

json clopen_to_json(const zp_clopen& a);
zp_clopen clopen_from_json(const json& j);

json zhat_to_json(const zhat_element& e);
zhat_element zhat_from_json(const json& j);

json poset_to_json(const finite_poset& x);
json poset_to_json(const finite_poset& x, const std::vector<std::string>& labels);
finite_poset poset_from_json(const json& j);

// The file's "labels" array, or the point indices as strings when absent.
std::vector<std::string> poset_labels_from_json(const json& j);

std::string dumps(const json& j);
json parse(const std::string& text);

} // namespace stonekit::io
