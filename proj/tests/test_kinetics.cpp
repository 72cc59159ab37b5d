#include "doctest.h"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <set>

#include "kinetics.hpp"

using namespace qdot;

namespace {

const LevelScheme kFlat = classify_scheme(0.5, 1.5, true, Symmetry::Axial);
const LevelScheme kTall = classify_scheme(0.5, 0.5, true, Symmetry::Axial);

DotParameters rates(double Gamma, double gamma, double Gamma2 = -1.0) {
    DotParameters p;
    p.Gamma = Gamma;
    p.Gamma2 = Gamma2 < 0.0 ? Gamma : Gamma2;
    p.gamma = gamma;
    return p;
}

}  // namespace

TEST_CASE("rate graph: no tunneling leaves only the radiative cascade") {
    const auto g = build_rate_graph(rates(1.0, 0.0), kFlat, true);
    for (const auto& e : g.edges) CHECK(e.kind == EdgeKind::Photon);
    CHECK(g.edges.size() == 4);
}

TEST_CASE("rate graph: flat-dot edge rates come from {gamma, 2gamma, Gamma, 2Gamma}") {
    const double Gamma = 1.0, gamma = 0.37;
    const auto g = build_rate_graph(rates(Gamma, gamma), kFlat, true);
    for (const auto& e : g.edges) {
        const bool known = std::abs(e.rate - gamma) < 1e-15 ||
                           std::abs(e.rate - 2.0 * gamma) < 1e-15 ||
                           std::abs(e.rate - Gamma) < 1e-15 ||
                           std::abs(e.rate - 2.0 * Gamma) < 1e-15;
        CHECK(known);
    }
    // sixteen states spread over the lumped levels
    int states = 0;
    for (int m : g.multiplicity) states += m;
    CHECK(states == 16);
}

TEST_CASE("rate graph: unsupported schemes rejected") {
    const auto high = classify_scheme(1.5, 1.5, true, Symmetry::Axial);
    CHECK_THROWS_AS(build_rate_graph(rates(1.0, 0.1), high, true),
                    std::domain_error);
}

TEST_CASE("cascade probabilities: flat dot at gamma = Gamma") {
    const auto g = build_rate_graph(rates(1.0, 1.0), kFlat, true);
    const auto cp = cascade_probabilities(g, g.index("biexciton"));
    CHECK(cp.P[0] == doctest::Approx(19.0 / 41).epsilon(1e-12));
    CHECK(cp.P[1] == doctest::Approx(6.0 / 41).epsilon(1e-12));
    CHECK(cp.P[2] == doctest::Approx(8.0 / 41).epsilon(1e-12));
    CHECK(cp.P[3] == doctest::Approx(8.0 / 41).epsilon(1e-12));
    CHECK(cp.P1k[0] == doctest::Approx(6.0 / 41).epsilon(1e-12));
    CHECK(cp.P1k[1] == doctest::Approx(17.0 / 41).epsilon(1e-12));
    CHECK(cp.P1k[2] == doctest::Approx(9.0 / 41).epsilon(1e-12));
    CHECK(cp.P1k[3] == doctest::Approx(9.0 / 41).epsilon(1e-12));
}

TEST_CASE("cascade probabilities: tall dot at Gamma_t = 2, gamma = 1") {
    const auto g = build_rate_graph(rates(1.0, 1.0), kTall, true);
    const auto cp = cascade_probabilities(g, g.index("biexciton"));
    CHECK(cp.P[1] == doctest::Approx(2.0 / 19).epsilon(1e-12));
    CHECK(cp.P[2] == doctest::Approx(3.0 / 19).epsilon(1e-12));
    CHECK(cp.P[3] == doctest::Approx(3.0 / 19).epsilon(1e-12));
    CHECK(cp.P1k[0] == doctest::Approx(2.0 / 19).epsilon(1e-12));  // P11 = P2
    CHECK(cp.P1k[2] == doctest::Approx(4.0 / 19).epsilon(1e-12));
    CHECK(cp.P1k[1] == doctest::Approx(9.0 / 19).epsilon(1e-12));
}

TEST_CASE("cascade probabilities: linear solve matches the closed forms") {
    for (int i = 0; i < 20; ++i) {
        const double x = std::pow(10.0, -3.0 + 6.0 * i / 19.0);
        {
            const auto g = build_rate_graph(rates(1.0, x), kFlat, true);
            const auto solved = cascade_probabilities(g, g.index("biexciton"));
            const auto closed = closed_cascade_flat(1.0, x);
            for (int k = 0; k < 4; ++k) {
                CHECK(solved.P[k] == doctest::Approx(closed.P[k]).epsilon(1e-10));
                CHECK(solved.P1k[k] ==
                      doctest::Approx(closed.P1k[k]).epsilon(1e-10));
            }
        }
        {
            const auto g = build_rate_graph(rates(1.0, x, 2.5), kTall, true);
            const auto solved = cascade_probabilities(g, g.index("biexciton"));
            const auto closed = closed_cascade_tall(1.0, 2.5, x);
            for (int k = 0; k < 4; ++k) {
                CHECK(solved.P[k] == doctest::Approx(closed.P[k]).epsilon(1e-10));
                CHECK(solved.P1k[k] ==
                      doctest::Approx(closed.P1k[k]).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("cascade probabilities: pure cascade without tunneling") {
    for (const auto& sch : {kFlat, kTall}) {
        const auto g = build_rate_graph(rates(1.0, 0.0), sch, true);
        const auto cp = cascade_probabilities(g, g.index("biexciton"));
        CHECK(cp.P[0] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(cp.P[1] == 0.0);
        CHECK(cp.P1k[1] == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("cascade probabilities: normalization identities") {
    for (double x : {1e-3, 0.1, 1.0, 50.0}) {
        const auto g = build_rate_graph(rates(1.0, x), kFlat, true);
        const auto cp = cascade_probabilities(g, g.index("biexciton"));
        CHECK(cp.P[3] == doctest::Approx(cp.P[2]).epsilon(1e-12));
        CHECK(cp.P[0] + cp.P[1] + 2.0 * cp.P[2] ==
              doctest::Approx(1.0).epsilon(1e-12));
        CHECK(cp.P1k[0] + cp.P1k[1] + 2.0 * cp.P1k[2] ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("cascade probabilities: fast-tunneling limit of the correlation") {
    const auto cp = closed_cascade_flat(1.0, 1e6);
    CHECK(cp.P1k[1] == doctest::Approx(0.25).epsilon(1e-5));
}

TEST_CASE("correlation plateau boundary of the closed form") {
    // P12 > 0.9 holds for gamma <= 0.039 Gamma; at gamma = Gamma/20 the
    // closed form gives exactly 2.465/2.81 = 0.87722..., already below 0.9.
    CHECK(closed_cascade_flat(1.0, 0.039).P1k[1] > 0.9);
    CHECK(closed_cascade_flat(1.0, 0.040).P1k[1] < 0.9);
    CHECK(closed_cascade_flat(1.0, 0.05).P1k[1] ==
          doctest::Approx(2.465 / 2.81).epsilon(1e-12));
}

TEST_CASE("no-tunneling pair fraction") {
    CHECK(no_tunnel_pair_fraction(rates(1.0, 0.0)) == 1.0);
    CHECK(no_tunnel_pair_fraction(rates(1.0, 0.1)) ==
          doctest::Approx(5.0 / 7).epsilon(1e-14));
    CHECK(no_tunnel_pair_fraction(rates(1.0, 1.0)) ==
          doctest::Approx(0.2).epsilon(1e-14));
    CHECK_THROWS_AS(no_tunnel_pair_fraction(rates(0.0, 0.1)), std::domain_error);
}

TEST_CASE("mean interphoton time: closed forms") {
    CHECK(mean_interphoton_time(rates(1.0, 1.0), kFlat) ==
          doctest::Approx(3.0).epsilon(1e-14));
    // Gamma_t = 2, gamma = 1: 8/9 + 1 + (2/9)(34/116) = 170/87
    CHECK(mean_interphoton_time(rates(1.0, 1.0), kTall) ==
          doctest::Approx(170.0 / 87).epsilon(1e-14));
    CHECK(mean_interphoton_time(rates(1.0, 1.0), kTall) ==
          doctest::Approx(1.9540).epsilon(1e-4));
    // fast tunneling leaves the radiative bottleneck 2/Gamma
    CHECK(mean_interphoton_time(rates(1.0, 1e12), kFlat) ==
          doctest::Approx(2.0).epsilon(1e-10));
    CHECK(mean_interphoton_time(rates(1.0, 0.0), kFlat) ==
          std::numeric_limits<double>::infinity());
}

TEST_CASE("mean interphoton time: stationary flux route agrees") {
    for (double x : {0.1, 1.0, 10.0})
        for (const auto& sch : {kFlat, kTall}) {
            const auto p = rates(1.0, x);
            const auto g = build_rate_graph(p, sch, true);
            CHECK(steady_state_interphoton_time(g) ==
                  doctest::Approx(mean_interphoton_time(p, sch)).epsilon(1e-8));
        }
}

TEST_CASE("generator: columns balance and the spectrum is stable") {
    for (const auto& sch : {kFlat, kTall}) {
        const auto g = build_rate_graph(rates(1.0, 0.7), sch, true);
        const Eigen::MatrixXd A = g.generator();
        CHECK(A.colwise().sum().cwiseAbs().maxCoeff() < 1e-12);
        const Eigen::EigenSolver<Eigen::MatrixXd> es(A, false);
        CHECK(es.eigenvalues().real().maxCoeff() < 1e-12);
    }
}

TEST_CASE("generator: off-resonance rates keep the columns balanced") {
    DotParameters p = rates(1.0, 0.25);
    p.V_bias = p.E_e + p.E_h + 3.0;  // above resonance
    p.Phi_gate = 0.5 * (p.E_e - p.E_h) - 0.5;
    const auto g = build_rate_graph(p, kFlat, false);
    const Eigen::MatrixXd A = g.generator();
    CHECK(A.colwise().sum().cwiseAbs().maxCoeff() < 1e-12);
    // moving off resonance breaks the in/out symmetry of the channel rates
    std::set<double> tunnel_rates;
    for (const auto& e : g.edges)
        if (e.kind == EdgeKind::Tunnel) tunnel_rates.insert(e.rate);
    CHECK(tunnel_rates.size() > 2);
}

TEST_CASE("post-transition-1 state targets the bright multiplet") {
    for (const auto& sch : {kFlat, kTall}) {
        const auto g = build_rate_graph(rates(1.0, 0.5), sch, true);
        const auto v = post_transition1_state(g);
        CHECK(v[g.index("exciton_bright")] == doctest::Approx(1.0));
        CHECK(v.sum() == doctest::Approx(1.0));
    }
}
