#include "params.hpp"

#include <stdexcept>

namespace qdot {

void check_parameters(const DotParameters& p) {
    if (p.Gamma < 0.0 || p.Gamma2 < 0.0)
        throw std::domain_error("radiative rates Gamma, Gamma2 must be >= 0");
    if (p.gamma < 0.0)
        throw std::domain_error("tunneling rate gamma must be >= 0");
    if (p.T <= 0.0)
        throw std::domain_error("temperature T must be > 0");
}

std::vector<std::string> parameter_warnings(const DotParameters& p) {
    std::vector<std::string> w;
    if (!(p.V_ee > 0.0))
        w.push_back("V_ee should be positive (like-carrier repulsion)");
    if (!(p.V_hh > p.V_ee))
        w.push_back("V_hh should exceed V_ee (holes are more confined)");
    if (p.V_eh_s > 0.0)
        w.push_back("V_eh_s should be <= 0 (attractive electron-hole pair)");
    if (p.V_eh_a > 0.0)
        w.push_back("V_eh_a should be <= 0 (attractive electron-hole pair)");
    return w;
}

}  // namespace qdot
