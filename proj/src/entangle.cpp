#include "entangle.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qdot {

PolarizationDensity cascade_density(double Delta, double Gamma, double gamma,
                                    double P) {
    if (P < 0.0 || P > 1.0)
        throw std::domain_error("pair fraction P must lie in [0, 1]");
    if (Gamma < 0.0 || gamma < 0.0)
        throw std::domain_error("rates must be >= 0");

    const std::complex<double> dephase =
        1.0 / std::complex<double>(1.0, Delta / (Gamma + 4.0 * gamma));
    PolarizationDensity d;
    d.rho(0, 0) = 0.5 * P;
    d.rho(3, 3) = 0.5 * P;
    d.rho(0, 3) = 0.5 * P * dephase;
    d.rho(3, 0) = std::conj(d.rho(0, 3));
    d.rho += 0.25 * (1.0 - P) * Eigen::Matrix4cd::Identity();
    return d;
}

EntanglementReport closed_concurrence_entropy(double Delta, double Gamma,
                                              double gamma, double P) {
    if (P < 0.0 || P > 1.0)
        throw std::domain_error("pair fraction P must lie in [0, 1]");
    const double mod = std::abs(std::complex<double>(1.0, Delta / (Gamma + 4.0 * gamma)));
    const double C = std::max(0.0, P / mod - 0.5 * (1.0 - P));
    return {C, entropy_from_concurrence(C), P};
}

double pair_fraction(PairMode mode, const LevelScheme& sch, const DotParameters& p) {
    if (!sch.entanglement_capable)
        throw std::domain_error(std::string("scheme ") +
                                scheme_name(sch.scheme_class) +
                                " does not produce entangled pairs");
    const double Pstar = no_tunnel_pair_fraction(p);
    if (mode == PairMode::Unfiltered) return Pstar;

    const CascadeProbabilities cp =
        sch.is_tall() ? closed_cascade_tall(p.Gamma, p.Gamma2, p.gamma)
                      : closed_cascade_flat(p.Gamma, p.gamma);
    const double P12 = cp.P1k[1];
    if (P12 <= 0.0)
        throw std::domain_error("P_12 vanishes; filtered pair fraction undefined");
    return sch.is_tall() ? 3.0 * Pstar / (2.0 * P12 + Pstar) : Pstar / P12;
}

}  // namespace qdot
