#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stonekit::laws {

struct law_result {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Names of the checkable laws, in report order. Each bundles the worked
// examples and randomized property checks of one theorem-sized claim.
const std::vector<std::string>& law_names();

// Run one named law. The seed is folded with the law name, so a law's
// verdict never depends on which other laws ran or in what order.
law_result run_law(const std::string& name, std::uint64_t seed);

// Run the whole catalogue, optionally spreading laws across threads; the
// results come back in report order either way.
std::vector<law_result> run_all(std::uint64_t seed, bool concurrent = true);

} // namespace stonekit::laws
