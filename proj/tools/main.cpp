// Command-line front end for the turnstile simulator; all functionality is
// reached through the shared library's C interface.

#include <CLI11.hpp>
#include <cstdio>
#include <string>

#include "qdturnstile.h"

int main(int argc, char** argv) {
    CLI::App app{
        "Two-photon turnstile simulator for small quantum dots: emission "
        "spectra, cascade photon statistics, photon-pair entanglement and "
        "cavity effects."};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".";
    std::uint64_t seed = 0;
    long trajectories = 0;
    app.add_option("--config", config_path, "flat key = value parameter file");
    app.add_option("--out", out_dir, "output directory for CSV files");
    auto* seed_opt = app.add_option("--seed", seed, "random seed override");
    auto* traj_opt =
        app.add_option("--trajectories", trajectories, "trajectory count override");

    const char* names[] = {"spectrum", "cascade", "entangle",
                           "cavity",   "simulate", "validate"};
    const char* descs[] = {
        "thermal emission lines and rendered spectrum",
        "cascade and conditional emission probabilities vs gamma/Gamma",
        "photon-pair concurrence and entanglement entropy sweeps",
        "entanglement entropy vs cavity misalignment",
        "stochastic photon streams and estimators",
        "run the full invariant suite (nonzero exit on failure)"};
    for (int i = 0; i < 6; ++i)
        app.add_subcommand(names[i], descs[i])->fallthrough();

    CLI11_PARSE(app, argc, argv);
    const std::string sub = app.get_subcommands().front()->get_name();

    qdt_config* cfg = nullptr;
    qdt_status rc = config_path.empty() ? qdt_config_create(&cfg)
                                        : qdt_config_load(config_path.c_str(), &cfg);
    if (rc != QDT_OK) {
        std::fprintf(stderr, "error (%s): %s\n", qdt_status_name(rc),
                     qdt_last_error());
        return 1;
    }
    if (seed_opt->count() > 0)
        qdt_config_set(cfg, "seed", std::to_string(seed).c_str());
    if (traj_opt->count() > 0)
        qdt_config_set(cfg, "trajectories", std::to_string(trajectories).c_str());

    rc = qdt_run(cfg, sub.c_str(), out_dir.c_str());
    qdt_config_free(cfg);
    if (rc == QDT_OK) return 0;
    if (rc != QDT_ERROR_FAILED_CHECKS)
        std::fprintf(stderr, "error (%s): %s\n", qdt_status_name(rc),
                     qdt_last_error());
    return 1;
}
