#include "trajectory.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "errors.hpp"

namespace qdot {

double GammaSchedule::factor_at(double t, int* segment_hint) const {
    int i = segment_hint ? *segment_hint : 0;
    while (i < static_cast<int>(segments.size()) && t >= segments[i].t_end) ++i;
    if (segment_hint) *segment_hint = i;
    return i < static_cast<int>(segments.size()) ? segments[i].factor
                                                 : tail_factor;
}

double GammaSchedule::next_breakpoint(double t) const {
    for (const auto& s : segments)
        if (t < s.t_end) return s.t_end;
    return std::numeric_limits<double>::infinity();
}

Estimate TrajectoryStats::P(int k) const {
    const double p = static_cast<double>(first_counts[k - 1]) / n_trajectories;
    return {p, std::sqrt(p * (1.0 - p) / n_trajectories)};
}

Estimate TrajectoryStats::P1(int k) const {
    const long n1 = first_counts[0];
    if (n1 == 0) return {0.0, 0.0};
    const double p = static_cast<double>(second_after_1[k - 1]) / n1;
    return {p, std::sqrt(p * (1.0 - p) / n1)};
}

Estimate TrajectoryStats::Pstar12() const {
    const long n1 = first_counts[0];
    if (n1 == 0) return {0.0, 0.0};
    const double p = static_cast<double>(immediate_12_pairs) / n1;
    return {p, std::sqrt(p * (1.0 - p) / n1)};
}

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::mt19937_64 trajectory_rng(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed ^ (0x5851f42d4c957f2dULL * (index + 1));
    return std::mt19937_64(splitmix64(s));
}

// Per-level outgoing edge table for O(1) lookup during sampling.
struct EdgeTable {
    struct Out {
        int dst;
        double rate;
        bool photon;
        int transition;
    };
    std::vector<std::vector<Out>> out;
    std::vector<double> tunnel_rate, photon_rate;

    explicit EdgeTable(const RateGraph& g)
        : out(g.size()), tunnel_rate(g.size(), 0.0), photon_rate(g.size(), 0.0) {
        for (const auto& e : g.edges) {
            const bool ph = e.kind == EdgeKind::Photon;
            out[e.src].push_back({e.dst, e.rate, ph, e.transition});
            (ph ? photon_rate : tunnel_rate)[e.src] += e.rate;
        }
    }
};

struct JumpResult {
    double time;
    int next_level;
    bool photon;
    int transition;
    bool stalled;
};

// One jump of the clock race, honoring piecewise-constant tunneling factors.
JumpResult next_jump(const EdgeTable& et, const GammaSchedule& sched, int level,
                     double t, std::mt19937_64& rng,
                     std::uniform_real_distribution<double>& unif,
                     int* seg_hint) {
    for (;;) {
        const double f = sched.factor_at(t, seg_hint);
        const double total = f * et.tunnel_rate[level] + et.photon_rate[level];
        if (total <= 0.0) return {t, level, false, 0, true};
        const double dt = -std::log(1.0 - unif(rng)) / total;
        const double t_break = sched.next_breakpoint(t);
        if (t + dt >= t_break) {
            t = t_break;  // no jump before the rate change; resample
            continue;
        }
        t += dt;
        double pick = unif(rng) * total;
        for (const auto& o : et.out[level]) {
            const double r = o.photon ? o.rate : f * o.rate;
            pick -= r;
            if (pick <= 0.0)
                return {t, o.dst, o.photon, o.transition, false};
        }
        const auto& last = et.out[level].back();
        return {t, last.dst, last.photon, last.transition, false};
    }
}

}  // namespace

TrajectoryStats simulate_trajectories(const RateGraph& g, int initial, long n,
                                      std::uint64_t seed,
                                      const SimulationOptions& opts) {
    if (n < 1) throw std::invalid_argument("need at least one trajectory");
    if (initial < 0 || initial >= g.size())
        throw std::invalid_argument("initial level out of range");

    const EdgeTable et(g);
    TrajectoryStats stats;
    stats.n_trajectories = n;
    if (opts.record_streams) stats.streams.resize(n);

    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (long i = 0; i < n; ++i) {
        auto rng = trajectory_rng(seed, static_cast<std::uint64_t>(i));
        int level = initial;
        double t = 0.0;
        int photons = 0;
        int first = 0, second = 0;
        bool jump_between = false;
        int seg_hint = 0;
        while (photons < opts.max_photons) {
            const JumpResult j =
                next_jump(et, opts.schedule, level, t, rng, unif, &seg_hint);
            if (j.stalled)
                throw StalledTrajectoryError(
                    "trajectory " + std::to_string(i) + " stalled in level '" +
                    g.levels[level] + "' with zero total rate");
            t = j.time;
            level = j.next_level;
            if (j.photon) {
                ++photons;
                if (photons == 1)
                    first = j.transition;
                else if (photons == 2) {
                    second = j.transition;
                    if (first == 1) {
                        ++stats.second_after_1[second - 1];
                        if (second == 2 && !jump_between)
                            ++stats.immediate_12_pairs;
                    }
                }
                if (opts.record_streams)
                    stats.streams[i].push_back({t, j.transition});
            } else if (photons == 1) {
                jump_between = true;
            }
        }
        if (first > 0) ++stats.first_counts[first - 1];
    }
    return stats;
}

Estimate simulate_steady_interphoton(const RateGraph& g, int initial,
                                     int n_traj, int photons_each, int burn_in,
                                     std::uint64_t seed) {
    if (n_traj < 2 || photons_each <= burn_in + 1)
        throw std::invalid_argument("steady-state estimate needs >= 2 "
                                    "trajectories and photons beyond burn-in");
    const EdgeTable et(g);
    const GammaSchedule no_schedule;
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    std::vector<double> means(n_traj);
    for (int i = 0; i < n_traj; ++i) {
        auto rng = trajectory_rng(seed ^ 0xa5a5a5a5a5a5a5a5ULL,
                                  static_cast<std::uint64_t>(i));
        int level = initial;
        double t = 0.0, t_prev = 0.0;
        int photons = 0;
        double gap_sum = 0.0;
        int gaps = 0;
        int seg_hint = 0;
        while (photons < photons_each) {
            const JumpResult j =
                next_jump(et, no_schedule, level, t, rng, unif, &seg_hint);
            if (j.stalled)
                throw StalledTrajectoryError(
                    "steady-state trajectory stalled in level '" +
                    g.levels[level] + "'");
            t = j.time;
            level = j.next_level;
            if (j.photon) {
                ++photons;
                if (photons > burn_in + 1) {
                    gap_sum += t - t_prev;
                    ++gaps;
                }
                t_prev = t;
            }
        }
        means[i] = gap_sum / gaps;
    }
    double m = 0.0;
    for (double v : means) m += v;
    m /= n_traj;
    double var = 0.0;
    for (double v : means) var += (v - m) * (v - m);
    var /= (n_traj - 1);
    return {m, std::sqrt(var / n_traj)};
}

}  // namespace qdot
