#include "thermal.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qdot {

Occupations fermi_occupations(const DotParameters& p) {
    if (p.T <= 0.0)
        throw std::domain_error("fermi_occupations requires T > 0");
    const double xe = (p.E_e - p.Phi_gate - 0.5 * p.V_bias) / p.T;
    const double xh = (p.E_h + p.Phi_gate - 0.5 * p.V_bias) / p.T;
    return {1.0 / (1.0 + std::exp(xe)), 1.0 / (1.0 + std::exp(xh))};
}

// Number of bright states in the one-exciton multiplet.
static int bright_count(const LevelScheme& sch) {
    return static_cast<int>(sch.bright_excitons.size());
}

std::map<std::string, double> level_populations(const Occupations& occ,
                                                const LevelScheme& sch) {
    const double pe = occ.p_e, ph = occ.p_h;
    const double qe = 1.0 - pe, qh = 1.0 - ph;
    const double x1 = pe * qe * ph * qh;  // population of each exciton state
    const int nb = bright_count(sch);

    std::map<std::string, double> pop;
    pop["ground"] = qe * qe * qh * qh;
    pop["electron"] = 2.0 * pe * qe * qh * qh;
    pop["hole"] = qe * qe * 2.0 * ph * qh;
    pop["electron2"] = pe * pe * qh * qh;
    pop["hole2"] = qe * qe * ph * ph;
    pop["exciton_bright"] = nb * x1;
    pop["exciton_dark"] = (4 - nb) * x1;
    pop["trion_neg"] = pe * pe * 2.0 * ph * qh;
    pop["trion_pos"] = 2.0 * pe * qe * ph * ph;
    pop["biexciton"] = pe * pe * ph * ph;
    return pop;
}

std::vector<SpectrumLine> emission_lines(const DotParameters& p,
                                         const LevelScheme& sch,
                                         const Occupations& occ) {
    const auto tt = transition_frequencies(p, sch);
    const double pe = occ.p_e, ph = occ.p_h;
    const double qe = 1.0 - pe, qh = 1.0 - ph;
    const double p_XX = pe * pe * ph * ph;
    const double x1 = pe * qe * ph * qh;
    const double p_Tp = 2.0 * pe * qe * ph * ph;
    const double p_Tm = pe * pe * 2.0 * ph * qh;
    const double w = p.Gamma;  // rendering FWHM: natural radiative width

    std::vector<SpectrumLine> lines;
    if (sch.is_tall()) {
        const double E_XX = level_energy(p, {2, 2, 0, 0});
        const double E_X0 = tall_singlet_energy(p);
        const double Gt = p.Gamma_t();
        lines.push_back({"omega1", tt.omega[0], 2.0 * p.Gamma * p_XX, w});
        lines.push_back({"omega1'", E_XX - E_X0, 2.0 * p.Gamma2 * p_XX, w});
        lines.push_back({"omega2", tt.omega[1], p.Gamma * 2.0 * x1, w});
        lines.push_back({"omega2'", E_X0, 2.0 * p.Gamma2 * x1, w});
        lines.push_back({"omega3", tt.omega[2], Gt * p_Tp, w});
        lines.push_back({"omega4", tt.omega[3], Gt * p_Tm, w});
    } else {
        const int nb = bright_count(sch);
        lines.push_back({"omega1", tt.omega[0], nb * p.Gamma * p_XX, w});
        lines.push_back({"omega2", tt.omega[1], nb * p.Gamma * x1, w});
        lines.push_back({"omega3", tt.omega[2], p.Gamma * p_Tp, w});
        lines.push_back({"omega4", tt.omega[3], p.Gamma * p_Tm, w});
    }
    return lines;
}

std::vector<SpectrumLine> emission_spectrum(const DotParameters& p,
                                            const LevelScheme& sch) {
    return emission_lines(p, sch, fermi_occupations(p));
}

std::vector<double> spectrum_curve(const std::vector<SpectrumLine>& lines,
                                   const std::vector<double>& grid) {
    if (grid.empty())
        throw std::domain_error("spectrum_curve requires a non-empty grid");
    std::vector<double> out(grid.size(), 0.0);
    for (const auto& ln : lines) {
        const double hw = 0.5 * ln.width;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double d = grid[i] - ln.omega;
            out[i] += ln.intensity * hw / (std::numbers::pi * (d * d + hw * hw));
        }
    }
    return out;
}

double mean_emission_time_thermal(const DotParameters& p, const LevelScheme& sch) {
    const auto occ = fermi_occupations(p);
    const double rate = sch.is_tall() ? p.Gamma_t() : p.Gamma;
    const double denom = 2.0 * rate * occ.p_e * occ.p_h;
    if (denom == 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / denom;
}

}  // namespace qdot
