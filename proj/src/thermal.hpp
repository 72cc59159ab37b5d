#pragma once

#include <map>
#include <string>
#include <vector>

#include "params.hpp"
#include "scheme.hpp"

namespace qdot {

// Equilibrium occupation probability of each electron / hole orbital in the
// strong-tunneling regime (Fermi-Dirac occupation of the attached bands).
struct Occupations {
    double p_e = 0.0;
    double p_h = 0.0;
};

//   p_e = 1 / (1 + exp((E_e - Phi - V/2) / T))
//   p_h = 1 / (1 + exp((E_h + Phi - V/2) / T))
// Throws std::domain_error for T <= 0.
Occupations fermi_occupations(const DotParameters& p);

// Thermal populations of the lumped levels under independent orbital
// occupations. Keys match the rate-graph level names; the exciton multiplet
// splits into "exciton_bright" / "exciton_dark" according to the scheme.
std::map<std::string, double> level_populations(const Occupations& occ,
                                                const LevelScheme& sch);

struct SpectrumLine {
    std::string label;
    double omega = 0.0;
    double intensity = 0.0;  // source population x radiative rate
    double width = 0.0;      // Lorentzian FWHM used for rendering
};

// One line per bright transition (four for flat dots, six for tall dots:
// the M=0 bright singlet adds its own biexciton and ground transitions).
std::vector<SpectrumLine> emission_lines(const DotParameters& p,
                                         const LevelScheme& sch,
                                         const Occupations& occ);

std::vector<SpectrumLine> emission_spectrum(const DotParameters& p,
                                            const LevelScheme& sch);

// Sum of unit-area Lorentzians of the given lines over the frequency grid.
// Throws std::domain_error on an empty grid.
std::vector<double> spectrum_curve(const std::vector<SpectrumLine>& lines,
                                   const std::vector<double>& grid);

// Average photon emission time in thermal equilibrium:
//   1 / (2 Gamma p_e p_h)            flat dots
//   1 / (2 (Gamma1+Gamma2) p_e p_h)  tall dots
// Returns +infinity when p_e p_h = 0.
double mean_emission_time_thermal(const DotParameters& p, const LevelScheme& sch);

}  // namespace qdot
