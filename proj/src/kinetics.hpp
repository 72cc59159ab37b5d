#pragma once

#include <Eigen/Dense>
#include <array>

#include "rate_graph.hpp"

namespace qdot {

// First-emission probabilities P_k (prepared in `initial`) and next-emission
// probabilities P_1k (prepared in the exciton level fed by transition 1).
struct CascadeProbabilities {
    std::array<double, 4> P{};    // P[k-1]  = P_k
    std::array<double, 4> P1k{};  // P1k[k-1] = P_1k
};

// Occupancy-time integrals from a linear solve against the loss-only
// generator: P_k = Gamma_k * integral of the occupation of transition k's
// source level. Restricted to the subspace reachable from the initial
// distribution; throws NumericError if probability can get trapped without
// photon emission.
CascadeProbabilities cascade_probabilities(const RateGraph& g, int initial);
CascadeProbabilities cascade_probabilities(const RateGraph& g,
                                           const Eigen::VectorXd& initial);

// Closed forms for the same quantities.
CascadeProbabilities closed_cascade_flat(double Gamma, double gamma);
CascadeProbabilities closed_cascade_tall(double Gamma1, double Gamma2, double gamma);

// Probability that the second cascade photon follows the first without an
// intervening tunneling event: Gamma / (Gamma + 4 gamma), with
// Gamma = Gamma_1 for tall dots.
double no_tunnel_pair_fraction(const DotParameters& p);

// Mean time between photon emissions in the steady state, closed form:
//   flat: 1/gamma + 2/Gamma
//   tall: 8/(9 gamma) + 2/Gamma_t
//         + (2/9)(5 Gamma_t + 24 gamma)/(3 Gamma_t^2 + 28 Gamma_t gamma + 48 gamma^2)
// Returns +infinity for gamma = 0.
double mean_interphoton_time(const DotParameters& p, const LevelScheme& sch);

// Stationary distribution of the full generator (normalized).
Eigen::VectorXd stationary_distribution(const RateGraph& g);

// 1 / (total stationary photon flux); the independent route to the mean
// interphoton time.
double steady_state_interphoton_time(const RateGraph& g);

// Initial distribution over levels right after a transition-1 photon,
// derived from the graph's transition-1 edges.
Eigen::VectorXd post_transition1_state(const RateGraph& g);

}  // namespace qdot
