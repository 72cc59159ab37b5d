#include "density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qdot {

void check_density(const PolarizationDensity& d) {
    const auto& r = d.rho;
    if ((r - r.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::domain_error("density operator is not Hermitian");
    if (std::abs(r.trace().real() - 1.0) > 1e-12 || std::abs(r.trace().imag()) > 1e-12)
        throw std::domain_error("density operator trace differs from 1");
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(
        0.5 * (r + r.adjoint()), Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
        throw std::domain_error("density operator is not positive semidefinite");
}

double wootters_concurrence(const PolarizationDensity& d) {
    check_density(d);
    const auto& r = d.rho;
    // sy x sy in the {xx, xy, yx, yy} basis: antidiagonal (-1, 1, 1, -1).
    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const Eigen::Matrix4cd R = r * yy * r.conjugate() * yy;
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(R, false);
    std::array<double, 4> lam{};
    for (int i = 0; i < 4; ++i)
        lam[i] = std::sqrt(std::max(0.0, es.eigenvalues()[i].real()));
    std::sort(lam.begin(), lam.end(), std::greater<>());
    return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

static double binary_entropy(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double entropy_from_concurrence(double C) {
    C = std::clamp(C, 0.0, 1.0);
    const double x = 0.5 + 0.5 * std::sqrt(1.0 - C * C);
    return binary_entropy(x);
}

}  // namespace qdot
