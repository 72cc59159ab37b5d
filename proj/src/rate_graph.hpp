#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "params.hpp"
#include "scheme.hpp"
#include "thermal.hpp"

namespace qdot {

enum class EdgeKind { Tunnel, Photon };

struct Edge {
    int src = 0;
    int dst = 0;
    double rate = 0.0;
    EdgeKind kind = EdgeKind::Tunnel;
    int transition = 0;  // 1..4 for photon edges, 0 for tunneling
};

// Continuous-time Markov jump process over the lumped multiplet levels.
// Levels carry their state multiplicities; edges are single-particle
// tunneling moves or photon emissions on the bright transitions.
struct RateGraph {
    std::vector<std::string> levels;
    std::vector<int> multiplicity;
    std::vector<Edge> edges;

    int index(const std::string& name) const;  // throws if unknown
    int size() const { return static_cast<int>(levels.size()); }

    // Full generator A with A(i,j) = rate j->i, columns summing to zero.
    Eigen::MatrixXd generator() const;

    // Photon gain terms dropped: tunneling flows plus photon loss on the
    // diagonal. Used for first-emission (absorbing) statistics.
    Eigen::MatrixXd loss_only_generator() const;

    double total_rate_out(int level) const;
};

// Electron and hole tunneling rates may differ in principle; all validated
// results use gamma_e = gamma_h = gamma.
struct TunnelingRates {
    double gamma_e = 0.0;
    double gamma_h = 0.0;
};

// Rate graph for a flat or tall dot. At resonance every allowed
// single-particle move proceeds at the channel rate gamma; off resonance the
// in/out moves are weighted by the band occupations (2 gamma p in,
// 2 gamma (1-p) out per channel), which reduces to gamma at p = 1/2.
// Throws std::domain_error for schemes without a radiative cascade.
RateGraph build_rate_graph(const DotParameters& p, const LevelScheme& sch,
                           bool at_resonance,
                           std::optional<TunnelingRates> rates = std::nullopt);

}  // namespace qdot
