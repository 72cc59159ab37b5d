#include "runner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cavity.hpp"
#include "csv.hpp"
#include "entangle.hpp"
#include "errors.hpp"
#include "kinetics.hpp"
#include "thermal.hpp"
#include "trajectory.hpp"
#include "validate.hpp"

namespace qdot {

namespace {

std::string join_path(const std::string& dir, const std::string& name) {
    if (dir.empty() || dir == ".") return name;
    return dir.back() == '/' ? dir + name : dir + "/" + name;
}

SweepSpec sweep_or_default(const RunConfig& cfg, const char* variable,
                           double min, double max, int steps, bool log_scale) {
    if (cfg.sweep.configured) {
        SweepSpec s = cfg.sweep;
        if (s.variable.empty()) s.variable = variable;
        if (s.steps == 0) s.steps = steps;
        if (s.min == 0.0 && s.max == 0.0) {
            s.min = min;
            s.max = max;
        }
        return s;
    }
    return {variable, min, max, steps, log_scale, true};
}

RunResult run_spectrum(const RunConfig& cfg, const std::string& out_dir) {
    const auto sch = scheme_of(cfg);
    const auto lines = emission_spectrum(cfg.dot, sch);
    const double scale = cfg.unit_scale;

    RunResult res;
    {
        const std::string path = join_path(out_dir, "spectrum_lines.csv");
        CsvWriter w(path, {"label", "omega", "strength"});
        for (const auto& ln : lines)
            w.row({ln.label, fmt_num(ln.omega * scale), fmt_num(ln.intensity)});
        res.files_written.push_back(path);
    }
    {
        double lo = cfg.omega_min, hi = cfg.omega_max;
        if (!(lo < hi)) {
            lo = lines.front().omega;
            hi = lines.front().omega;
            for (const auto& ln : lines) {
                lo = std::min(lo, ln.omega);
                hi = std::max(hi, ln.omega);
            }
            lo -= 6.0 * cfg.dot.Gamma;
            hi += 6.0 * cfg.dot.Gamma;
        }
        std::vector<double> grid(cfg.omega_points);
        for (int i = 0; i < cfg.omega_points; ++i)
            grid[i] = lo + (hi - lo) * i / (cfg.omega_points - 1);
        const auto curve = spectrum_curve(lines, grid);
        const std::string path = join_path(out_dir, "spectrum_curve.csv");
        CsvWriter w(path, {"omega", "intensity"});
        for (std::size_t i = 0; i < grid.size(); ++i)
            w.row_nums({grid[i] * scale, curve[i]});
        res.files_written.push_back(path);
    }
    res.report = "spectrum: " + std::to_string(lines.size()) + " lines";
    return res;
}

RunResult run_cascade(const RunConfig& cfg, const std::string& out_dir) {
    const auto sch = scheme_of(cfg);
    const auto spec = sweep_or_default(cfg, "gamma_over_Gamma", 1e-2, 1e2, 41, true);
    const auto grid = sweep_grid(spec);

    const std::string path = join_path(out_dir, "cascade.csv");
    CsvWriter w(path, {"gamma_over_Gamma", "P1", "P2", "P3", "P4", "P11", "P12",
                       "P13", "P14", "Pstar12"});
    for (double x : grid) {
        DotParameters p = cfg.dot;
        p.gamma = x * p.Gamma;
        const auto g = build_rate_graph(p, sch, true);
        const auto cp = cascade_probabilities(g, g.index("biexciton"));
        w.row_nums({x, cp.P[0], cp.P[1], cp.P[2], cp.P[3], cp.P1k[0], cp.P1k[1],
                    cp.P1k[2], cp.P1k[3], no_tunnel_pair_fraction(p)});
    }
    RunResult res;
    res.files_written.push_back(path);
    res.report = "cascade: " + std::to_string(grid.size()) + " sweep points";
    return res;
}

RunResult run_entangle(const RunConfig& cfg, const std::string& out_dir) {
    const auto sch = scheme_of(cfg);
    if (!sch.entanglement_capable)
        throw std::domain_error(std::string("scheme ") +
                                scheme_name(sch.scheme_class) +
                                " does not produce entangled pairs");
    const auto spec = sweep_or_default(cfg, "gamma_over_Gamma", 1e-3, 1.0, 46, true);
    const auto grid = sweep_grid(spec);

    std::vector<PairMode> modes;
    if (cfg.mode == "unfiltered" || cfg.mode == "both")
        modes.push_back(PairMode::Unfiltered);
    if (cfg.mode == "filtered" || cfg.mode == "both")
        modes.push_back(PairMode::Filtered);

    const std::string path = join_path(out_dir, "entangle.csv");
    CsvWriter w(path, {"gamma_over_Gamma", "Delta_over_Gamma", "mode", "scheme",
                       "P", "C", "E"});
    for (PairMode mode : modes)
        for (double dg : cfg.Delta_over_Gamma)
            for (double x : grid) {
                DotParameters p = cfg.dot;
                p.gamma = x * p.Gamma;
                const double P = pair_fraction(mode, sch, p);
                const auto rep = closed_concurrence_entropy(dg * p.Gamma, p.Gamma,
                                                            p.gamma, P);
                w.row({fmt_num(x), fmt_num(dg),
                       mode == PairMode::Unfiltered ? "unfiltered" : "filtered",
                       scheme_name(sch.scheme_class), fmt_num(P),
                       fmt_num(rep.concurrence), fmt_num(rep.entropy)});
            }
    RunResult res;
    res.files_written.push_back(path);
    res.report = "entangle: " + std::to_string(grid.size()) + " sweep points x " +
                 std::to_string(cfg.Delta_over_Gamma.size()) + " splittings";
    return res;
}

RunResult run_cavity(const RunConfig& cfg, const std::string& out_dir) {
    SweepSpec spec = sweep_or_default(cfg, "theta", 0.0, std::numbers::pi / 2.0, 50, false);
    auto thetas = sweep_grid(spec);
    // theta = pi/2 itself is a degenerate geometry; stop one step short.
    if (thetas.back() >= std::numbers::pi / 2.0 - 1e-12)
        for (auto& t : thetas)
            t *= static_cast<double>(thetas.size() - 1) / thetas.size();

    std::vector<double> Deltas;
    for (double dg : cfg.cavity_Delta_over_Gamma)
        Deltas.push_back(dg * cfg.dot.Gamma);
    const auto rows = cavity_entanglement_sweep(thetas, cfg.phi, Deltas,
                                                cfg.dot.Gamma, cfg.dot.gamma);

    const std::string path = join_path(out_dir, "cavity.csv");
    CsvWriter w(path, {"theta", "phi", "Delta_over_Gamma", "gamma_over_Gamma",
                       "P", "C", "E"});
    for (const auto& r : rows)
        w.row_nums({r.theta, r.phi, r.Delta / cfg.dot.Gamma,
                    r.gamma / cfg.dot.Gamma, r.P, r.C, r.E});
    RunResult res;
    res.files_written.push_back(path);
    res.report = "cavity: " + std::to_string(rows.size()) + " grid points";
    return res;
}

RunResult run_simulate(const RunConfig& cfg, const std::string& out_dir) {
    const auto sch = scheme_of(cfg);
    const auto g = build_rate_graph(cfg.dot, sch, true);
    SimulationOptions opts;
    opts.max_photons = cfg.max_photons;
    opts.record_streams = true;
    const auto stats = simulate_trajectories(g, g.index(cfg.initial),
                                             cfg.trajectories, cfg.seed, opts);

    RunResult res;
    {
        const std::string path = join_path(out_dir, "photons.csv");
        CsvWriter w(path, {"trajectory_id", "time", "transition"});
        for (long i = 0; i < cfg.trajectories; ++i)
            for (const auto& rec : stats.streams[i])
                w.row({std::to_string(i), fmt_num(rec.time),
                       std::to_string(rec.transition)});
        res.files_written.push_back(path);
    }
    {
        const std::string path = join_path(out_dir, "estimators.csv");
        CsvWriter w(path, {"quantity", "value", "std_error"});
        for (int k = 1; k <= 4; ++k) {
            const auto e = stats.P(k);
            w.row({"P" + std::to_string(k), fmt_num(e.value), fmt_num(e.std_error)});
        }
        for (int k = 1; k <= 4; ++k) {
            const auto e = stats.P1(k);
            w.row({"P1" + std::to_string(k), fmt_num(e.value), fmt_num(e.std_error)});
        }
        const auto ps = stats.Pstar12();
        w.row({"Pstar12", fmt_num(ps.value), fmt_num(ps.std_error)});
        const auto tbar = simulate_steady_interphoton(
            g, g.index(cfg.initial), 400, 120, 20, cfg.seed);
        w.row({"mean_interphoton_time", fmt_num(tbar.value), fmt_num(tbar.std_error)});
        res.files_written.push_back(path);
    }
    res.report = "simulate: " + std::to_string(cfg.trajectories) + " trajectories";
    return res;
}

RunResult run_validate(const RunConfig& cfg) {
    const auto results = run_validation(cfg);
    RunResult res;
    res.report = format_report(results);
    res.exit_code = all_passed(results) ? 0 : 1;
    return res;
}

}  // namespace

RunResult run_subcommand(const std::string& subcommand, const RunConfig& cfg,
                         const std::string& out_dir) {
    check_parameters(cfg.dot);
    if (subcommand == "spectrum") return run_spectrum(cfg, out_dir);
    if (subcommand == "cascade") return run_cascade(cfg, out_dir);
    if (subcommand == "entangle") return run_entangle(cfg, out_dir);
    if (subcommand == "cavity") return run_cavity(cfg, out_dir);
    if (subcommand == "simulate") return run_simulate(cfg, out_dir);
    if (subcommand == "validate") return run_validate(cfg);
    throw std::invalid_argument("unknown subcommand '" + subcommand +
                                "'; expected spectrum, cascade, entangle, "
                                "cavity, simulate or validate");
}

}  // namespace qdot
