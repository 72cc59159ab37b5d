#pragma once

#include <vector>

#include "density.hpp"

namespace qdot {

// Geometry of a microcavity resonant with the lower cascade transition,
// misaligned by polar angle theta and azimuth phi with respect to the dot
// axis. The second photon's polarization modes u = x cos(phi) + y sin(phi)
// and v = y cos(phi) - x sin(phi) decay at Gamma cos^2(theta) and Gamma.
struct CavityGeometry {
    double theta = 0.0;
    double phi = 0.0;
    double Gamma = 1.0;
    double Delta = 0.0;
    double gamma = 0.0;
};

struct CavityDensity {
    PolarizationDensity density;
    double pair_fraction = 0.0;  // trace of the coherent integral term
};

// Waiting-time averaged two-photon density operator
//   rho = int_0^inf sqrt(G) e^{-iHt - Gt/2} sigma e^{iHt - Gt/2 - 4 gamma t} sqrt(G) dt
//       + (1 - P) 1/4,
// H = Delta |x><x| and G the cavity decay operator acting on photon 2,
// sigma the pure cascade pair, P fixed by the trace of the integral.
// Evaluated through the closed-form eigendecomposition of -iH - G/2.
// Throws std::domain_error at theta = pi/2 (non-decaying u mode).
CavityDensity cavity_density(const CavityGeometry& geo);

// Same integral by adaptive quadrature; retained as an independent check.
CavityDensity cavity_density_quadrature(const CavityGeometry& geo,
                                        double rel_tol = 1e-9);

struct CavitySweepRow {
    double theta, phi, Delta, gamma, P, C, E;
};

// Entanglement entropy across a theta grid for each Delta value.
std::vector<CavitySweepRow> cavity_entanglement_sweep(
    const std::vector<double>& thetas, double phi,
    const std::vector<double>& Deltas, double Gamma, double gamma);

}  // namespace qdot
