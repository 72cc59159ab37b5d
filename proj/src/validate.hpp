#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace qdot {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs the full invariant suite: state enumeration, spectral identities,
// thermal populations and monotonicity, the closed-form / linear-solve /
// Monte Carlo triangle, generator sanity, entanglement cross-formulas and
// cavity consistency. Deterministic given cfg.seed.
std::vector<CheckResult> run_validation(const RunConfig& cfg);

std::string format_report(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qdot
