#include "doctest.h"

#include <cmath>
#include <random>
#include <set>

#include "scheme.hpp"
#include "states.hpp"

using namespace qdot;

namespace {

// Fixed parameter set used by the hand-computed energy values below.
DotParameters sample_params() {
    DotParameters p;
    p.E_e = 10.0;
    p.E_h = 8.0;
    p.V_ee = 1.0;
    p.V_hh = 2.0;
    p.V_eh_s = -0.5;
    p.V_eh_a = -0.4;
    p.V_x1 = 0.1;
    p.V_x2 = 0.05;
    return p;
}

DotParameters random_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    DotParameters p;
    p.E_e = 100.0 + 900.0 * u(rng);
    p.E_h = 50.0 + 700.0 * u(rng);
    p.V_ee = 0.2 + 4.0 * u(rng);
    p.V_hh = p.V_ee + 0.1 + 4.0 * u(rng);
    p.V_eh_s = -5.0 * u(rng);
    p.V_eh_a = -5.0 * u(rng);
    p.V_x1 = u(rng) - 0.5;
    p.V_x2 = u(rng) - 0.5;
    return p;
}

}  // namespace

TEST_CASE("level energy: hand-substituted occupation classes") {
    const auto p = sample_params();
    // ground state is the reference
    CHECK(level_energy(p, {0, 0, 0, 0}) == 0.0);
    // biexciton: 2E_e + 2E_h + V_ee + V_hh - 2(V_eh_s + V_eh_a)
    CHECK(level_energy(p, {2, 2, 0, 0}) == doctest::Approx(40.8).epsilon(1e-14));
    // parallel-pair time-even exciton: E_e + E_h + V_eh_s + V_x1
    CHECK(level_energy(p, {1, 1, +1, +1}) == doctest::Approx(17.6).epsilon(1e-14));
    // negative trion: 2E_e + E_h + V_ee - (V_eh_s + V_eh_a)
    CHECK(level_energy(p, {2, 1, 0, 0}) == doctest::Approx(29.9).epsilon(1e-14));
    // single carriers sit at the quasi-particle energies
    CHECK(level_energy(p, {1, 0, 0, 0}) == 10.0);
    CHECK(level_energy(p, {0, 1, 0, 0}) == 8.0);
}

TEST_CASE("level energy: antiparallel-pair branch evaluates verbatim") {
    // The closed expression gives E_e + E_h - V_eh_s - 2 V_eh_a + t V_x2 for
    // the s = -1 excitons (not the mirror image of the s = +1 branch).
    const auto p = sample_params();
    CHECK(level_energy(p, {1, 1, -1, +1}) == doctest::Approx(19.35).epsilon(1e-14));
    CHECK(level_energy(p, {1, 1, -1, -1}) == doctest::Approx(19.25).epsilon(1e-14));
}

TEST_CASE("level energy: invalid quantum numbers rejected") {
    const auto p = sample_params();
    CHECK_THROWS_AS(level_energy(p, {1, 1, 0, 0}), std::domain_error);
    CHECK_THROWS_AS(level_energy(p, {0, 0, 1, 1}), std::domain_error);
    CHECK_THROWS_AS(level_energy(p, {2, 0, 0, 1}), std::domain_error);
    CHECK_THROWS_AS(level_energy(p, {3, 0, 0, 0}), std::domain_error);
    CHECK_THROWS_AS(level_energy(p, {0, -1, 0, 0}), std::domain_error);
}

TEST_CASE("state space: sixteen basis states in nine occupation levels") {
    const auto states = enumerate_states();
    int total = 0;
    for (const auto& si : states) {
        total += si.multiplicity;
        // charge +-1 levels are exactly the time-reversal doublets
        const bool doublet = si.charge == 1 || si.charge == -1;
        CHECK(si.multiplicity == (doublet ? 2 : 1));
    }
    CHECK(total == 16);
    CHECK(count_energy_levels(states) == 9);
}

TEST_CASE("classification: flat cylindrical dot") {
    const auto sch = classify_scheme(0.5, 1.5, true, Symmetry::Axial);
    CHECK(sch.scheme_class == SchemeClass::FlatCylindrical);
    CHECK(sch.bright_excitons.size() == 2);  // |M| = 1 doublet
    CHECK(sch.dark_excitons.size() == 2);    // |M| = 2 doublet
    CHECK(sch.entanglement_capable);
}

TEST_CASE("classification: tall cylindrical dot") {
    const auto sch = classify_scheme(0.5, 0.5, true, Symmetry::Axial);
    CHECK(sch.scheme_class == SchemeClass::TallCylindrical);
    CHECK(sch.bright_excitons.size() == 3);  // doublet plus one M=0 singlet
    CHECK(sch.dark_excitons.size() == 1);    // the time-odd M=0 singlet
    CHECK(sch.entanglement_capable);
}

TEST_CASE("classification: high angular momentum and no spin-orbit cases") {
    const auto high = classify_scheme(1.5, 1.5, true, Symmetry::Axial);
    CHECK(high.scheme_class == SchemeClass::HighM);
    CHECK(high.bright_excitons.size() == 1);
    CHECK_FALSE(high.entanglement_capable);

    const auto spinless = classify_scheme(0.5, 1.5, false, Symmetry::None);
    CHECK(spinless.scheme_class == SchemeClass::NoSpinOrbit);
    CHECK(spinless.bright_excitons.size() == 1);  // the S=0 singlet
    CHECK(spinless.dark_excitons.size() == 3);    // the S=1 triplet
    CHECK_FALSE(spinless.entanglement_capable);

    const auto generic = classify_scheme(0.5, 0.5, true, Symmetry::None);
    CHECK(generic.scheme_class == SchemeClass::GenericTimeReversal);
    CHECK(generic.bright_excitons.size() == 4);
    CHECK(generic.dark_excitons.empty());
}

TEST_CASE("classification: every scheme splits the exciton multiplet 4 ways") {
    for (const auto& sch :
         {classify_scheme(0.5, 1.5, true, Symmetry::Axial),
          classify_scheme(0.5, 0.5, true, Symmetry::Axial),
          classify_scheme(2.5, 2.5, true, Symmetry::Axial),
          classify_scheme(0.5, 0.5, false, Symmetry::None),
          classify_scheme(1.5, 0.5, true, Symmetry::None)})
        CHECK(sch.bright_excitons.size() + sch.dark_excitons.size() == 4);
}

TEST_CASE("classification: invalid quantum numbers and dark-only geometries") {
    CHECK_THROWS_AS(classify_scheme(1.0, 0.5, true, Symmetry::Axial),
                    std::domain_error);
    CHECK_THROWS_AS(classify_scheme(0.0, 0.5, true, Symmetry::Axial),
                    std::domain_error);
    // |m_e - m_h| >= 2 forbids every dipole transition
    CHECK_THROWS_AS(classify_scheme(0.5, 2.5, true, Symmetry::Axial),
                    std::domain_error);
}

TEST_CASE("transition frequencies: trion splitting equals V_hh - V_ee") {
    DotParameters p = sample_params();
    p.V_eh_s = p.V_eh_a = -0.75;
    p.V_x1 = p.V_x2 = 0.0;
    const auto sch = classify_scheme(0.5, 1.5, true, Symmetry::Axial);
    const auto tt = transition_frequencies(p, sch);
    CHECK(tt.omega[2] - tt.omega[3] ==
          doctest::Approx(p.V_hh - p.V_ee).epsilon(1e-14));

    DotParameters q = p;
    q.V_hh = q.V_ee;  // symmetric repulsion degenerates the trion lines
    const auto tt2 = transition_frequencies(q, sch);
    CHECK(tt2.omega[2] == doctest::Approx(tt2.omega[3]).epsilon(1e-14));
}

TEST_CASE("transition frequencies: cascade sum rule for random parameters") {
    std::mt19937_64 rng(2024);
    const auto flat = classify_scheme(0.5, 1.5, true, Symmetry::Axial);
    const auto tall = classify_scheme(0.5, 0.5, true, Symmetry::Axial);
    const auto generic = classify_scheme(0.5, 0.5, true, Symmetry::None);
    for (int i = 0; i < 300; ++i) {
        const auto p = random_params(rng);
        for (const auto& sch : {flat, tall, generic}) {
            const auto tt = transition_frequencies(p, sch);
            CHECK(tt.omega[0] + tt.omega[1] ==
                  doctest::Approx(tt.omega[2] + tt.omega[3]).epsilon(1e-13));
        }
    }
}

TEST_CASE("transition frequencies: ordering under attractive direct elements") {
    std::mt19937_64 rng(77);
    const auto tall = classify_scheme(0.5, 0.5, true, Symmetry::Axial);
    const auto generic = classify_scheme(0.5, 0.5, true, Symmetry::None);
    const auto flat = classify_scheme(0.5, 1.5, true, Symmetry::Axial);
    for (int i = 0; i < 300; ++i) {
        const auto p = random_params(rng);
        for (const auto& sch : {tall, generic}) {
            const auto tt = transition_frequencies(p, sch);
            CHECK(tt.omega[0] - tt.omega[1] > tt.omega[2] - tt.omega[3]);
            CHECK(tt.omega[2] - tt.omega[3] > 0.0);
        }
        // The verbatim antiparallel-pair energies need V_ee + V_eh_a >= 0 for
        // the flat-dot ordering; restrict to that subset.
        if (p.V_ee + p.V_eh_a >= 0.0) {
            const auto tt = transition_frequencies(p, flat);
            CHECK(tt.omega[0] - tt.omega[1] > tt.omega[2] - tt.omega[3]);
        }
    }
}

TEST_CASE("transition frequencies: a scheme without bright excitons is an error") {
    LevelScheme sch = classify_scheme(0.5, 1.5, true, Symmetry::Axial);
    sch.bright_excitons.clear();
    CHECK_THROWS_WITH_AS(transition_frequencies(sample_params(), sch),
                         doctest::Contains("FlatCylindrical"), std::domain_error);
}

TEST_CASE("exciton splitting") {
    DotParameters p = sample_params();  // V_x1 = 0.1, V_x2 = 0.05
    const auto flat = classify_scheme(0.5, 1.5, true, Symmetry::Axial);
    const auto tall = classify_scheme(0.5, 0.5, true, Symmetry::Axial);
    CHECK(exciton_splitting(p, flat) == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(exciton_splitting(p, tall) == doctest::Approx(0.1).epsilon(1e-14));

    p.V_x1 = p.V_x2 = 0.0;  // perfect axial symmetry
    CHECK(exciton_splitting(p, flat) == 0.0);
    CHECK(exciton_splitting(p, tall) == 0.0);

    const auto high = classify_scheme(1.5, 1.5, true, Symmetry::Axial);
    CHECK_THROWS_AS(exciton_splitting(p, high), std::domain_error);
}
