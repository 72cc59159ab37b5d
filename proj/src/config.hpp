#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "params.hpp"
#include "scheme.hpp"

namespace qdot {

struct SweepSpec {
    std::string variable = "gamma_over_Gamma";
    double min = 0.0;
    double max = 0.0;
    int steps = 0;
    bool log_scale = true;
    bool configured = false;  // false: subcommand default applies
};

// Everything one invocation needs: dot parameters, scheme inputs, sweep and
// output settings. Parsed from a flat `key = value` file with `#` comments.
struct RunConfig {
    DotParameters dot;

    double m_e = 0.5;
    double m_h = 1.5;
    bool spin_orbit = true;
    Symmetry symmetry = Symmetry::Axial;

    std::uint64_t seed = 12345;
    long trajectories = 10000;
    int max_photons = 2;
    std::string initial = "biexciton";

    SweepSpec sweep;
    std::vector<double> Delta_over_Gamma = {0.0, 0.2, 0.4};
    std::vector<double> cavity_Delta_over_Gamma = {0.1, 0.2, 0.4};
    double phi = 0.7853981633974483;  // pi/4
    std::string mode = "both";        // unfiltered | filtered | both

    double omega_min = 0.0;           // spectrum grid; equal bounds = automatic
    double omega_max = 0.0;
    int omega_points = 1200;
    double unit_scale = 1.0;          // display scale for energies
};

// Known keys, for documentation and nearest-key suggestions.
const std::vector<std::string>& config_keys();

// Applies one key/value pair. Throws ParseError (carrying `line`) for an
// unknown key (naming the nearest valid one) or a malformed value.
void config_set(RunConfig& cfg, const std::string& key, const std::string& value,
                int line = 0);

RunConfig parse_config_text(const std::string& text);
RunConfig load_config_file(const std::string& path);

LevelScheme scheme_of(const RunConfig& cfg);

// Sweep grid for the given spec (log or linear spacing, steps >= 2).
std::vector<double> sweep_grid(const SweepSpec& spec);

}  // namespace qdot
