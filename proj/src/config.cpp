#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace qdot {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& value, int line) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        pos = std::string::npos;
    }
    if (pos != value.size())
        throw ParseError("line " + std::to_string(line) +
                             ": malformed number for key '" + key + "': '" +
                             value + "'",
                         line);
    return v;
}

long parse_integer(const std::string& key, const std::string& value, int line) {
    const double v = parse_number(key, value, line);
    if (v != std::floor(v))
        throw ParseError("line " + std::to_string(line) + ": key '" + key +
                             "' expects an integer, got '" + value + "'",
                         line);
    return static_cast<long>(v);
}

bool parse_bool(const std::string& key, const std::string& value, int line) {
    if (value == "true" || value == "yes" || value == "1") return true;
    if (value == "false" || value == "no" || value == "0") return false;
    throw ParseError("line " + std::to_string(line) + ": key '" + key +
                         "' expects true/false, got '" + value + "'",
                     line);
}

std::vector<double> parse_list(const std::string& key, const std::string& value,
                               int line) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty())
            throw ParseError("line " + std::to_string(line) + ": key '" + key +
                                 "' has an empty list entry",
                             line);
        out.push_back(parse_number(key, item, line));
    }
    if (out.empty())
        throw ParseError("line " + std::to_string(line) + ": key '" + key +
                             "' expects a comma-separated list",
                         line);
    return out;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t sub = prev[j - 1] + (a[i - 1] != b[j - 1]);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

}  // namespace

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = {
        "E_e", "E_h", "V_ee", "V_hh", "V_eh_s", "V_eh_a", "V_x1", "V_x2",
        "Gamma", "Gamma2", "gamma", "T", "V_bias", "Phi_gate",
        "m_e", "m_h", "spin_orbit", "symmetry",
        "seed", "trajectories", "max_photons", "initial",
        "sweep_variable", "sweep_min", "sweep_max", "sweep_steps", "sweep_scale",
        "Delta_over_Gamma", "cavity_Delta_over_Gamma", "phi", "mode",
        "omega_min", "omega_max", "omega_points", "unit_scale",
    };
    return keys;
}

void config_set(RunConfig& cfg, const std::string& key, const std::string& value,
                int line) {
    auto num = [&] { return parse_number(key, value, line); };
    auto integer = [&] { return parse_integer(key, value, line); };

    if (key == "E_e") cfg.dot.E_e = num();
    else if (key == "E_h") cfg.dot.E_h = num();
    else if (key == "V_ee") cfg.dot.V_ee = num();
    else if (key == "V_hh") cfg.dot.V_hh = num();
    else if (key == "V_eh_s") cfg.dot.V_eh_s = num();
    else if (key == "V_eh_a") cfg.dot.V_eh_a = num();
    else if (key == "V_x1") cfg.dot.V_x1 = num();
    else if (key == "V_x2") cfg.dot.V_x2 = num();
    else if (key == "Gamma") cfg.dot.Gamma = num();
    else if (key == "Gamma2") cfg.dot.Gamma2 = num();
    else if (key == "gamma") cfg.dot.gamma = num();
    else if (key == "T") cfg.dot.T = num();
    else if (key == "V_bias") cfg.dot.V_bias = num();
    else if (key == "Phi_gate") cfg.dot.Phi_gate = num();
    else if (key == "m_e") cfg.m_e = num();
    else if (key == "m_h") cfg.m_h = num();
    else if (key == "spin_orbit") cfg.spin_orbit = parse_bool(key, value, line);
    else if (key == "symmetry") {
        if (value == "axial") cfg.symmetry = Symmetry::Axial;
        else if (value == "none") cfg.symmetry = Symmetry::None;
        else
            throw ParseError("line " + std::to_string(line) +
                                 ": symmetry must be 'axial' or 'none', got '" +
                                 value + "'",
                             line);
    }
    else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(integer());
    else if (key == "trajectories") {
        cfg.trajectories = integer();
        if (cfg.trajectories < 1)
            throw ParseError("line " + std::to_string(line) +
                                 ": trajectories must be >= 1",
                             line);
    }
    else if (key == "max_photons") {
        cfg.max_photons = static_cast<int>(integer());
        if (cfg.max_photons < 1)
            throw ParseError("line " + std::to_string(line) +
                                 ": max_photons must be >= 1",
                             line);
    }
    else if (key == "initial") cfg.initial = value;
    else if (key == "sweep_variable") {
        cfg.sweep.variable = value;
        cfg.sweep.configured = true;
    }
    else if (key == "sweep_min") { cfg.sweep.min = num(); cfg.sweep.configured = true; }
    else if (key == "sweep_max") { cfg.sweep.max = num(); cfg.sweep.configured = true; }
    else if (key == "sweep_steps") {
        cfg.sweep.steps = static_cast<int>(integer());
        cfg.sweep.configured = true;
    }
    else if (key == "sweep_scale") {
        if (value == "log") cfg.sweep.log_scale = true;
        else if (value == "linear") cfg.sweep.log_scale = false;
        else
            throw ParseError("line " + std::to_string(line) +
                                 ": sweep_scale must be 'log' or 'linear'",
                             line);
        cfg.sweep.configured = true;
    }
    else if (key == "Delta_over_Gamma")
        cfg.Delta_over_Gamma = parse_list(key, value, line);
    else if (key == "cavity_Delta_over_Gamma")
        cfg.cavity_Delta_over_Gamma = parse_list(key, value, line);
    else if (key == "phi") cfg.phi = num();
    else if (key == "mode") {
        if (value != "unfiltered" && value != "filtered" && value != "both")
            throw ParseError("line " + std::to_string(line) +
                                 ": mode must be unfiltered, filtered or both",
                             line);
        cfg.mode = value;
    }
    else if (key == "omega_min") cfg.omega_min = num();
    else if (key == "omega_max") cfg.omega_max = num();
    else if (key == "omega_points") {
        cfg.omega_points = static_cast<int>(integer());
        if (cfg.omega_points < 2)
            throw ParseError("line " + std::to_string(line) +
                                 ": omega_points must be >= 2",
                             line);
    }
    else if (key == "unit_scale") cfg.unit_scale = num();
    else {
        const auto& keys = config_keys();
        std::string best = keys.front();
        std::size_t best_d = edit_distance(key, best);
        for (const auto& k : keys) {
            const std::size_t d = edit_distance(key, k);
            if (d < best_d) {
                best_d = d;
                best = k;
            }
        }
        throw ParseError("line " + std::to_string(line) + ": unknown key '" +
                             key + "'; nearest valid key: '" + best + "'",
                         line);
    }
}

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::stringstream ss(text);
    std::string raw;
    int line = 0;
    while (std::getline(ss, raw)) {
        ++line;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string s = trim(raw);
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(line) +
                                 ": expected 'key = value', got '" + s + "'",
                             line);
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty())
            throw ParseError("line " + std::to_string(line) + ": missing key",
                             line);
        config_set(cfg, key, value, line);
    }
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

LevelScheme scheme_of(const RunConfig& cfg) {
    return classify_scheme(cfg.m_e, cfg.m_h, cfg.spin_orbit, cfg.symmetry);
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
    if (!(spec.min < spec.max))
        throw std::domain_error("sweep requires min < max");
    if (spec.steps < 2)
        throw std::domain_error("sweep requires steps >= 2");
    std::vector<double> grid(spec.steps);
    if (spec.log_scale) {
        if (spec.min <= 0.0)
            throw std::domain_error("log sweep requires min > 0");
        const double a = std::log(spec.min), b = std::log(spec.max);
        for (int i = 0; i < spec.steps; ++i)
            grid[i] = std::exp(a + (b - a) * i / (spec.steps - 1));
    } else {
        for (int i = 0; i < spec.steps; ++i)
            grid[i] = spec.min + (spec.max - spec.min) * i / (spec.steps - 1);
    }
    return grid;
}

}  // namespace qdot
