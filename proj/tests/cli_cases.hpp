#pragma once

// Shared by the CLI test suite and the acceptance gate: run the built binary
// against the golden corpus.  STONEKIT_CLI_PATH, STONEKIT_FIXTURE_DIR and
// STONEKIT_GOLDEN_DIR come in as compile definitions.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

namespace cli_harness {

struct cli_result {
    int code = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline cli_result run_cli(const std::string& args) {
    static int counter = 0;
    const std::string tag =
        std::to_string(::getpid()) + "_" + std::to_string(counter++);
    const std::string out_path = "/tmp/stonekit_cli_" + tag + ".out";
    const std::string err_path = "/tmp/stonekit_cli_" + tag + ".err";
    const std::string cmd = std::string(STONEKIT_CLI_PATH) + " " + args + " > " +
                            out_path + " 2> " + err_path;
    const int status = std::system(cmd.c_str());
    cli_result r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

inline std::string fixture(const std::string& name) {
    return std::string(STONEKIT_FIXTURE_DIR) + "/" + name;
}

inline std::string golden(const std::string& name) {
    return slurp(std::string(STONEKIT_GOLDEN_DIR) + "/" + name);
}

struct golden_case {
    const char* name;  // file under the golden directory
    std::string args;  // CLI arguments producing exactly that output
};

// One case per golden file; every subcommand and format appears at least once.
inline std::vector<golden_case> golden_cases() {
    const std::string vee = fixture("vee.json");
    const std::string chain2 = fixture("chain2.json");
    const std::string ca = fixture("clopen_a.json");
    const std::string cb = fixture("clopen_b.json");
    const std::string mf = fixture("map_f.json");
    const std::string mg = fixture("map_g.json");
    return {
        {"algebra_atoms.json", "algebra atoms --powerset 3 --format json"},
        {"algebra_validate.txt", "algebra validate --idempotent 12"},
        {"algebra_validate.json", "algebra validate --powerset 2 --format json"},
        {"algebra_granules.txt", "algebra granules --powerset 4 --gens 3"},
        {"algebra_granules.json",
         "algebra granules --powerset 4 --gens 3,6 --format json"},
        {"algebra_ultrafilters.txt", "algebra ultrafilters --powerset 2"},
        {"algebra_ultrafilters.json",
         "algebra ultrafilters --powerset 2 --format json"},
        {"stone_dualize.json", "stone dualize --idempotent 6 --format json"},
        {"stone_dualize.dot", "stone dualize --powerset 2 --format dot"},
        {"stone_dualize.txt", "stone dualize --powerset 3"},
        {"stone_eta.json", "stone eta --powerset 2 --format json"},
        {"stone_phi.txt", "stone phi --points 3"},
        {"stone_phi.json", "stone phi --points 2 --format json"},
        {"stone_lift.json",
         "stone lift --surjection " + mf + " --map " + mg + " --format json"},
        {"stone_lift.txt", "stone lift --surjection " + mf + " --map " + mg},
        {"padic_add.txt", "padic add --p 5 --n 2 --x 2 --y 3"},
        {"padic_add.json", "padic add --p 5 --n 3 --x -1 --y 0 --format json"},
        {"padic_mul.txt", "padic mul --p 3 --n 3 --x 4 --y 5"},
        {"padic_digits.txt", "padic digits --n 4 --x 13"},
        {"padic_digits.json", "padic digits --n 4 --x 13 --format json"},
        {"padic_tree.dot", "padic tree --p 2 --depth 2 --format dot"},
        {"padic_tree.txt", "padic tree --p 3 --depth 2"},
        {"zhat_embed.txt", "zhat embed --z 7 --moduli 1,2,3,4,6,12"},
        {"zhat_embed.json", "zhat embed --z 7 --moduli 1,2,3,4,6,12 --format json"},
        {"clopen_union.txt", "clopen op --op union --a " + ca + " --b " + cb},
        {"clopen_intersection.txt",
         "clopen op --op intersection --a " + ca + " --b " + cb},
        {"clopen_complement.json",
         "clopen op --op complement --a " + cb + " --format json"},
        {"clopen_granule.txt", "clopen granule --p 2 --level 1 --set " + ca},
        {"clopen_granule.json",
         "clopen granule --p 2 --level 1 --set " + cb + " --format json"},
        {"ro_analyze.txt", "ro analyze --poset " + vee},
        {"ro_analyze.json", "ro analyze --poset " + vee + " --format json"},
        {"ro_hasse.dot", "ro analyze --poset " + vee + " --format dot"},
        {"ro_edcheck.txt", "ro ed-check --poset " + vee},
        {"ro_edcheck.json", "ro ed-check --poset " + vee + " --format json"},
        {"ro_edcheck_ed.txt", "ro ed-check --poset " + chain2},
        {"laws_run.txt", "laws run --seed 0"},
    };
}

} // namespace cli_harness
