#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nlg {

struct CheckResult {
    std::string group; // chsh, ma, ee, nand, nmaj, orand, validators
    std::string name;
    std::string computed;
    std::string expected;
    bool pass = false;
};

struct VerifyOptions {
    std::string only;          // substring filter on the group name
    std::uint64_t seed = 2024; // for the heuristic ascent checks
    int threads = 1;
};

// Recomputes every closed-form value, certificate construction and bound
// from first principles and compares against its known result. One row per
// check; the validators group cross-checks inequalities between everything
// computed in the same run.
std::vector<CheckResult> run_paper_checks(const VerifyOptions& opt = {});

} // namespace nlg
