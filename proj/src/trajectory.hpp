#pragma once

#include <cstdint>
#include <vector>

#include "rate_graph.hpp"

namespace qdot {

struct PhotonRecord {
    double time = 0.0;
    int transition = 0;  // 1..4
};

// Piecewise-constant multiplier applied to all tunneling rates; models the
// gate-voltage switching protocol. Each segment holds until its t_end; after
// the last segment tail_factor applies.
struct GammaSchedule {
    struct Segment {
        double t_end;
        double factor;
    };
    std::vector<Segment> segments;
    double tail_factor = 1.0;

    bool empty() const { return segments.empty() && tail_factor == 1.0; }
    double factor_at(double t, int* segment_hint = nullptr) const;
    double next_breakpoint(double t) const;
};

struct SimulationOptions {
    int max_photons = 2;       // stop each trajectory after this many photons
    bool record_streams = false;
    GammaSchedule schedule;
};

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
};

// Exact-jump (competing exponential clocks) sampling over the rate graph.
struct TrajectoryStats {
    long n_trajectories = 0;
    std::array<long, 4> first_counts{};        // first photon on transition k
    std::array<long, 4> second_after_1{};      // second photon, first was 1
    long immediate_12_pairs = 0;               // 1 then 2 with no jump between
    std::vector<std::vector<PhotonRecord>> streams;  // if record_streams

    Estimate P(int k) const;     // k = 1..4
    Estimate P1(int k) const;    // conditional on first = 1
    Estimate Pstar12() const;    // immediate-pair fraction
};

// Runs n independent trajectories from `initial`, each until max_photons
// photons (or a zero-rate absorbing state once the photon budget is met).
// Reproducible: trajectory i uses an RNG derived from (seed, i), so batches
// may be split across calls or workers without changing the streams.
// Throws StalledTrajectoryError if a trajectory reaches a zero-rate state
// before emitting its photon budget.
TrajectoryStats simulate_trajectories(const RateGraph& g, int initial, long n,
                                      std::uint64_t seed,
                                      const SimulationOptions& opts = {});

// Mean interphoton time in the steady state: n_traj independent trajectories
// emitting photons_each photons, the first burn_in gaps discarded;
// the spread across trajectories gives the standard error.
Estimate simulate_steady_interphoton(const RateGraph& g, int initial,
                                     int n_traj, int photons_each, int burn_in,
                                     std::uint64_t seed);

}  // namespace qdot
