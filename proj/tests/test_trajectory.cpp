#include "doctest.h"

#include <cmath>

#include "errors.hpp"
#include "kinetics.hpp"
#include "trajectory.hpp"

using namespace qdot;

namespace {

const LevelScheme kFlat = classify_scheme(0.5, 1.5, true, Symmetry::Axial);
const LevelScheme kTall = classify_scheme(0.5, 0.5, true, Symmetry::Axial);

DotParameters rates(double Gamma, double gamma) {
    DotParameters p;
    p.Gamma = p.Gamma2 = Gamma;
    p.gamma = gamma;
    return p;
}

}  // namespace

TEST_CASE("trajectories: identical seeds give identical photon streams") {
    const auto g = build_rate_graph(rates(1.0, 0.8), kFlat, true);
    SimulationOptions opts;
    opts.record_streams = true;
    const auto a = simulate_trajectories(g, g.index("biexciton"), 200, 99, opts);
    const auto b = simulate_trajectories(g, g.index("biexciton"), 200, 99, opts);
    REQUIRE(a.streams.size() == b.streams.size());
    for (std::size_t i = 0; i < a.streams.size(); ++i) {
        REQUIRE(a.streams[i].size() == b.streams[i].size());
        for (std::size_t j = 0; j < a.streams[i].size(); ++j) {
            CHECK(a.streams[i][j].time == b.streams[i][j].time);
            CHECK(a.streams[i][j].transition == b.streams[i][j].transition);
        }
    }

    const auto c = simulate_trajectories(g, g.index("biexciton"), 200, 100, opts);
    bool any_different = false;
    for (std::size_t i = 0; i < a.streams.size() && !any_different; ++i)
        if (a.streams[i].size() != c.streams[i].size() ||
            a.streams[i][0].time != c.streams[i][0].time)
            any_different = true;
    CHECK(any_different);
}

TEST_CASE("trajectories: without tunneling every run is the bare cascade") {
    const auto g = build_rate_graph(rates(1.0, 0.0), kFlat, true);
    SimulationOptions opts;
    opts.record_streams = true;
    const auto s = simulate_trajectories(g, g.index("biexciton"), 500, 7, opts);
    CHECK(s.first_counts[0] == 500);
    for (const auto& stream : s.streams) {
        REQUIRE(stream.size() == 2);
        CHECK(stream[0].transition == 1);
        CHECK(stream[1].transition == 2);
        CHECK(stream[0].time < stream[1].time);
        CHECK(stream[0].time > 0.0);
    }
    CHECK(s.Pstar12().value == 1.0);
}

TEST_CASE("trajectories: photon times strictly increase") {
    const auto g = build_rate_graph(rates(1.0, 2.0), kTall, true);
    SimulationOptions opts;
    opts.max_photons = 6;
    opts.record_streams = true;
    const auto s = simulate_trajectories(g, g.index("biexciton"), 100, 11, opts);
    for (const auto& stream : s.streams) {
        REQUIRE(stream.size() == 6);
        for (std::size_t j = 1; j < stream.size(); ++j)
            CHECK(stream[j].time > stream[j - 1].time);
    }
}

TEST_CASE("trajectories: estimators reproduce the closed forms") {
    const long n = 200000;
    {
        const auto g = build_rate_graph(rates(1.0, 1.0), kFlat, true);
        const auto s = simulate_trajectories(g, g.index("biexciton"), n, 31415);
        const auto closed = closed_cascade_flat(1.0, 1.0);
        for (int k = 1; k <= 4; ++k) {
            const auto est = s.P(k);
            CHECK(std::abs(est.value - closed.P[k - 1]) < 3.0 * est.std_error);
        }
        const auto p12 = s.P1(2);
        CHECK(std::abs(p12.value - closed.P1k[1]) < 3.0 * p12.std_error);
        // immediate pairs: Gamma / (Gamma + 4 gamma) = 1/5
        const auto ps = s.Pstar12();
        CHECK(std::abs(ps.value - 0.2) < 3.0 * ps.std_error);
    }
    {
        const auto g = build_rate_graph(rates(1.0, 1.0), kTall, true);
        const auto s = simulate_trajectories(g, g.index("biexciton"), n, 2718);
        const auto closed = closed_cascade_tall(1.0, 1.0, 1.0);
        const auto p2 = s.P(2);
        CHECK(std::abs(p2.value - closed.P[1]) < 3.0 * p2.std_error);
        const auto p13 = s.P1(3);
        CHECK(std::abs(p13.value - closed.P1k[2]) < 3.0 * p13.std_error);
    }
}

TEST_CASE("trajectories: stalled state without a photon budget is an error") {
    const auto g = build_rate_graph(rates(1.0, 0.0), kFlat, true);
    CHECK_THROWS_AS(
        simulate_trajectories(g, g.index("ground"), 1, 5),
        StalledTrajectoryError);
}

TEST_CASE("trajectories: invalid arguments") {
    const auto g = build_rate_graph(rates(1.0, 0.1), kFlat, true);
    CHECK_THROWS_AS(simulate_trajectories(g, g.index("biexciton"), 0, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(simulate_trajectories(g, 99, 10, 5), std::invalid_argument);
}

TEST_CASE("trajectories: tunneling schedule switches the preparation on and off") {
    // Phase one: strong tunneling pulse loads the dot from the ground state;
    // phase two: resonant trickle. The biexciton photon must appear.
    const auto g = build_rate_graph(rates(1.0, 0.4), kFlat, true);
    SimulationOptions opts;
    opts.record_streams = true;
    opts.schedule.segments = {{0.5, 60.0}};
    opts.schedule.tail_factor = 1.0;
    const auto s = simulate_trajectories(g, g.index("ground"), 300, 123, opts);
    long total = 0;
    for (const auto& st : s.streams) total += static_cast<long>(st.size());
    CHECK(total == 600);

    // A zero tail factor freezes tunneling entirely: from the biexciton the
    // trajectory is the bare two-photon cascade even though gamma > 0.
    SimulationOptions frozen;
    frozen.record_streams = true;
    frozen.schedule.tail_factor = 0.0;
    const auto s2 =
        simulate_trajectories(g, g.index("biexciton"), 200, 5, frozen);
    CHECK(s2.first_counts[0] == 200);
    CHECK(s2.Pstar12().value == 1.0);
}

TEST_CASE("steady-state interphoton estimate brackets the closed form") {
    for (const auto& sch : {kFlat, kTall}) {
        const auto p = rates(1.0, 1.0);
        const auto g = build_rate_graph(p, sch, true);
        const auto est = simulate_steady_interphoton(g, g.index("biexciton"),
                                                     300, 120, 20, 424242);
        const double expected = mean_interphoton_time(p, sch);
        CHECK(std::abs(est.value - expected) < 3.0 * est.std_error);
        CHECK(est.std_error < 0.05 * expected);
    }
}
