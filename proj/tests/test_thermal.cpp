#include "doctest.h"

#include <cmath>
#include <limits>

#include "thermal.hpp"

using namespace qdot;

namespace {

const LevelScheme kFlat = classify_scheme(0.5, 1.5, true, Symmetry::Axial);
const LevelScheme kTall = classify_scheme(0.5, 0.5, true, Symmetry::Axial);

// Gate centered between the levels, bias offset above resonance in units of T.
DotParameters biased(double bias_offset, double gate_offset = 0.0) {
    DotParameters p;
    p.T = 1.0;
    p.Phi_gate = 0.5 * (p.E_e - p.E_h) + gate_offset;
    p.V_bias = p.E_e + p.E_h + bias_offset;
    return p;
}

double line(const std::vector<SpectrumLine>& lines, const std::string& label) {
    for (const auto& ln : lines)
        if (ln.label == label) return ln.intensity;
    FAIL("missing line ", label);
    return 0.0;
}

}  // namespace

TEST_CASE("occupations: exactly one half at resonance") {
    const auto occ = fermi_occupations(biased(0.0));
    CHECK(occ.p_e == 0.5);
    CHECK(occ.p_h == 0.5);
}

TEST_CASE("occupations: one thermal unit above the chemical potential") {
    DotParameters p = biased(0.0);
    p.E_e += 1.0;  // electron argument becomes +k_B T
    const auto occ = fermi_occupations(p);
    CHECK(occ.p_e == doctest::Approx(1.0 / (1.0 + std::exp(1.0))).epsilon(1e-14));
    CHECK(occ.p_e == doctest::Approx(0.2689414213699951).epsilon(1e-12));
    CHECK(occ.p_h == 0.5);
}

TEST_CASE("occupations: deep bias saturates the dot") {
    const auto occ = fermi_occupations(biased(4000.0));
    CHECK(occ.p_e == 1.0);
    CHECK(occ.p_h == 1.0);
}

TEST_CASE("occupations: invalid temperature") {
    DotParameters p;
    p.T = 0.0;
    CHECK_THROWS_AS(fermi_occupations(p), std::domain_error);
    p.T = -1.0;
    CHECK_THROWS_AS(fermi_occupations(p), std::domain_error);
}

TEST_CASE("populations: half filling") {
    const auto pop = level_populations({0.5, 0.5}, kFlat);
    CHECK(pop.at("biexciton") == doctest::Approx(1.0 / 16).epsilon(1e-14));
    CHECK(pop.at("exciton_bright") == doctest::Approx(1.0 / 8).epsilon(1e-14));
    CHECK(pop.at("exciton_dark") == doctest::Approx(1.0 / 8).epsilon(1e-14));
    CHECK(pop.at("trion_pos") == doctest::Approx(1.0 / 8).epsilon(1e-14));
    CHECK(pop.at("trion_neg") == doctest::Approx(1.0 / 8).epsilon(1e-14));

    // tall dots put three of the four exciton states in the bright multiplet
    const auto tall = level_populations({0.5, 0.5}, kTall);
    CHECK(tall.at("exciton_bright") == doctest::Approx(3.0 / 16).epsilon(1e-14));
    CHECK(tall.at("exciton_dark") == doctest::Approx(1.0 / 16).epsilon(1e-14));
}

TEST_CASE("populations: saturated dot is pure biexciton") {
    const auto pop = level_populations({1.0, 1.0}, kFlat);
    CHECK(pop.at("biexciton") == 1.0);
    for (const auto& [name, v] : pop)
        if (name != "biexciton") CHECK(v == 0.0);
}

TEST_CASE("populations: normalized over the whole level set") {
    for (double pe : {0.0, 0.2, 0.5, 0.77, 1.0})
        for (double ph : {0.0, 0.33, 0.5, 1.0})
            for (const auto& sch : {kFlat, kTall}) {
                const auto pop = level_populations({pe, ph}, sch);
                double sum = 0.0;
                for (const auto& [name, v] : pop) sum += v;
                CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
            }
}

TEST_CASE("spectrum: biexciton line dominates well above resonance") {
    const auto lines = emission_spectrum(biased(6.0), kFlat);
    REQUIRE(lines.size() == 4);
    const double i1 = line(lines, "omega1");
    for (const auto& ln : lines)
        if (ln.label != "omega1") CHECK(i1 > ln.intensity);
}

TEST_CASE("spectrum: negative gate shift favors the positive trion line") {
    const auto lines = emission_spectrum(biased(2.0, -1.0), kFlat);
    const double i3 = line(lines, "omega3");
    CHECK(i3 > line(lines, "omega4"));
    CHECK(i3 > line(lines, "omega2"));
    CHECK(i3 >= line(lines, "omega1") - 1e-15);  // exact tie at p_e = 1/2

    // mirrored gate shift favors the negative trion line instead
    const auto mirrored = emission_spectrum(biased(2.0, +1.0), kFlat);
    CHECK(line(mirrored, "omega4") > line(mirrored, "omega3"));
}

TEST_CASE("spectrum: saturated dot emits only the biexciton line") {
    const auto lines = emission_lines(biased(0.0), kFlat, {1.0, 1.0});
    for (const auto& ln : lines) {
        if (ln.label == "omega1")
            CHECK(ln.intensity > 0.0);
        else
            CHECK(ln.intensity == 0.0);
    }
}

TEST_CASE("spectrum: tall dots emit six lines") {
    const auto lines = emission_spectrum(biased(4.0), kTall);
    CHECK(lines.size() == 6);
    // total bright-exciton strength splits between the doublet and singlet
    CHECK(line(lines, "omega2") > 0.0);
    CHECK(line(lines, "omega2'") > 0.0);
}

TEST_CASE("spectrum curve: Lorentzian rendering peaks at the strongest line") {
    const auto p = biased(6.0);
    const auto lines = emission_spectrum(p, kFlat);
    double lo = 1e300, hi = -1e300, omega1 = 0.0;
    for (const auto& ln : lines) {
        lo = std::min(lo, ln.omega - 4.0);
        hi = std::max(hi, ln.omega + 4.0);
        if (ln.label == "omega1") omega1 = ln.omega;
    }
    std::vector<double> grid(2001);
    for (int i = 0; i < 2001; ++i) grid[i] = lo + (hi - lo) * i / 2000;
    const auto curve = spectrum_curve(lines, grid);
    int argmax = 0;
    for (int i = 0; i < 2001; ++i)
        if (curve[i] > curve[argmax]) argmax = i;
    CHECK(std::abs(grid[argmax] - omega1) < 0.05);

    CHECK_THROWS_AS(spectrum_curve(lines, {}), std::domain_error);
}

TEST_CASE("mean emission time") {
    DotParameters p = biased(4000.0);  // saturated: p_e = p_h = 1
    CHECK(mean_emission_time_thermal(p, kFlat) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(mean_emission_time_thermal(p, kTall) == doctest::Approx(0.25).epsilon(1e-14));

    const DotParameters res = biased(0.0);  // p_e = p_h = 1/2
    CHECK(mean_emission_time_thermal(res, kFlat) == doctest::Approx(2.0).epsilon(1e-14));

    DotParameters empty = biased(-4000.0);  // p_e = p_h = 0
    CHECK(mean_emission_time_thermal(empty, kFlat) ==
          std::numeric_limits<double>::infinity());
}
