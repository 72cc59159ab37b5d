#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace qdot {

struct RunResult {
    int exit_code = 0;
    std::vector<std::string> files_written;
    std::string report;  // human-readable summary (validate: full check list)
};

// Executes one subcommand: spectrum | cascade | entangle | cavity |
// simulate | validate. Output files land in out_dir; all outputs are
// deterministic for a given (config, seed).
RunResult run_subcommand(const std::string& subcommand, const RunConfig& cfg,
                         const std::string& out_dir);

}  // namespace qdot
