#pragma once

#include "density.hpp"
#include "kinetics.hpp"
#include "params.hpp"
#include "scheme.hpp"

namespace qdot {

// Two-photon state of the biexciton cascade with exchange splitting Delta
// and residual tunneling: a fraction P is the dephased pair
//   (P/2) [ |xx><yy| / (1 + i Delta/(Gamma+4 gamma)) + h.c.
//           + |xx><xx| + |yy><yy| ]
// and the rest is fully mixed. Throws for P outside [0, 1].
PolarizationDensity cascade_density(double Delta, double Gamma, double gamma,
                                    double P);

struct EntanglementReport {
    double concurrence = 0.0;
    double entropy = 0.0;
    double pair_fraction = 0.0;
};

// Closed form: C = max(0, P / |1 + i Delta/(Gamma+4 gamma)| - (1-P)/2),
// entropy from the concurrence. Negative C is defined as zero.
EntanglementReport closed_concurrence_entropy(double Delta, double Gamma,
                                              double gamma, double P);

enum class PairMode { Unfiltered, Filtered };

// Probability that a detected photon pair is the immediate 1-2 cascade:
//   unfiltered          P = Gamma / (Gamma + 4 gamma)
//   filtered (flat)     P = P*_12 / P_12
//   filtered (tall)     P = 3 P*_12 / (2 P_12 + P*_12)
// where P_12 is the conditional second-photon probability of the scheme.
double pair_fraction(PairMode mode, const LevelScheme& sch, const DotParameters& p);

}  // namespace qdot
