// Acceptance gate: one line per criterion, PASS or FAIL, exit 0 only when
// every criterion holds.  Criteria 1..12 are the law catalogue; criterion 13
// drives the CLI binary over the golden corpus and checks the JSON contract.

#include "cli_cases.hpp"

#include "stonekit/json_io.hpp"
#include "stonekit/laws.hpp"

#include <cstdio>
#include <string>

namespace {

bool check_cli(std::string& detail) {
    using namespace cli_harness;

    std::size_t json_count = 0;
    for (const auto& gc : golden_cases()) {
        const std::string expected = golden(gc.name);
        if (expected.empty()) {
            detail = std::string("golden file ") + gc.name + " is missing";
            return false;
        }
        cli_result r = run_cli(gc.args);
        if (r.code != 0) {
            detail = std::string(gc.name) + ": exit " + std::to_string(r.code);
            return false;
        }
        if (r.out != expected) {
            detail = std::string(gc.name) + ": output diverged from the golden file";
            return false;
        }
        const std::string name = gc.name;
        if (name.size() >= 5 && name.substr(name.size() - 5) == ".json") {
            ++json_count;
            if (stonekit::io::dumps(stonekit::io::parse(r.out)) != r.out) {
                detail = name + ": emitted json is not canonical";
                return false;
            }
        }
    }

    cli_result lr = run_cli("laws run --seed 0");
    if (lr.code != 0) {
        detail = "laws run exited " + std::to_string(lr.code);
        return false;
    }

    detail = std::to_string(golden_cases().size()) + " golden files match, " +
             std::to_string(json_count) + " json emissions canonical, laws run exits 0";
    return true;
}

} // namespace

int main() {
    int failed = 0;
    const auto& names = stonekit::laws::law_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        stonekit::laws::law_result r = stonekit::laws::run_law(names[i], 0);
        std::printf("%s %2zu %s: %s\n", r.passed ? "PASS" : "FAIL", i + 1,
                    r.name.c_str(), r.detail.c_str());
        std::fflush(stdout);
        failed += !r.passed;
    }

    std::string detail;
    const bool cli_ok = check_cli(detail);
    std::printf("%s 13 cli-golden-roundtrip: %s\n", cli_ok ? "PASS" : "FAIL",
                detail.c_str());
    failed += !cli_ok;

    std::printf("%d/13 criteria hold\n", 13 - failed);
    return failed == 0 ? 0 : 1;
}
