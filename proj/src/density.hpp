#pragma once

#include <Eigen/Dense>
#include <complex>

namespace qdot {

// Two-photon polarization density operator in the product basis
// {|xx>, |xy>, |yx>, |yy>}.
struct PolarizationDensity {
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
};

// Hermiticity and unit trace within 1e-12, positive semidefiniteness within
// -1e-10 on the smallest eigenvalue. Throws std::domain_error on violation.
void check_density(const PolarizationDensity& d);

// General two-qubit concurrence via the spin-flip construction:
// C = max(0, l1 - l2 - l3 - l4) with l_i the decreasing square roots of the
// eigenvalues of rho (sy x sy) rho* (sy x sy).
double wootters_concurrence(const PolarizationDensity& d);

// Entanglement of formation in ebits:
// E = h(1/2 + sqrt(1 - C^2)/2), h the binary entropy, C clipped at 0.
double entropy_from_concurrence(double C);

}  // namespace qdot
