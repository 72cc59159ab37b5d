#include "kinetics.hpp"

#include <cmath>
#include <limits>
#include <queue>

#include "errors.hpp"

namespace qdot {

Eigen::VectorXd post_transition1_state(const RateGraph& g) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(g.size());
    double total = 0.0;
    for (const auto& e : g.edges)
        if (e.kind == EdgeKind::Photon && e.transition == 1) {
            v[e.dst] += e.rate;
            total += e.rate;
        }
    if (total <= 0.0)
        throw NumericError("graph has no transition-1 photon edge");
    return v / total;
}

// Levels reachable from the support of p0 through any edge flow.
static std::vector<int> reachable_set(const RateGraph& g,
                                      const Eigen::VectorXd& p0) {
    std::vector<char> seen(g.size(), 0);
    std::queue<int> work;
    for (int i = 0; i < g.size(); ++i)
        if (p0[i] != 0.0) {
            seen[i] = 1;
            work.push(i);
        }
    while (!work.empty()) {
        const int s = work.front();
        work.pop();
        for (const auto& e : g.edges)
            if (e.kind == EdgeKind::Tunnel && e.src == s && !seen[e.dst]) {
                seen[e.dst] = 1;
                work.push(e.dst);
            }
    }
    std::vector<int> out;
    for (int i = 0; i < g.size(); ++i)
        if (seen[i]) out.push_back(i);
    return out;
}

CascadeProbabilities cascade_probabilities(const RateGraph& g,
                                           const Eigen::VectorXd& initial) {
    const auto solve_occupancy = [&g](const Eigen::VectorXd& p0) {
        const auto sub = reachable_set(g, p0);
        for (int i : sub)
            if (g.total_rate_out(i) <= 0.0)
                throw NumericError("level '" + g.levels[i] +
                                   "' is reachable but has no outgoing rate; "
                                   "occupancy integral diverges");
        const int m = static_cast<int>(sub.size());
        const Eigen::MatrixXd A = g.loss_only_generator();
        Eigen::MatrixXd As(m, m);
        Eigen::VectorXd ps(m);
        for (int a = 0; a < m; ++a) {
            ps[a] = p0[sub[a]];
            for (int b = 0; b < m; ++b) As(a, b) = A(sub[a], sub[b]);
        }
        const Eigen::VectorXd tau_s = (-As).partialPivLu().solve(ps);
        Eigen::VectorXd tau = Eigen::VectorXd::Zero(g.size());
        for (int a = 0; a < m; ++a) tau[sub[a]] = tau_s[a];
        if (!tau.allFinite())
            throw NumericError("singular transient generator");
        return tau;
    };

    CascadeProbabilities cp;
    const Eigen::VectorXd tau0 = solve_occupancy(initial);
    const Eigen::VectorXd tau1 = solve_occupancy(post_transition1_state(g));
    for (const auto& e : g.edges)
        if (e.kind == EdgeKind::Photon) {
            cp.P[e.transition - 1] += e.rate * tau0[e.src];
            cp.P1k[e.transition - 1] += e.rate * tau1[e.src];
        }
    return cp;
}

CascadeProbabilities cascade_probabilities(const RateGraph& g, int initial) {
    Eigen::VectorXd p0 = Eigen::VectorXd::Zero(g.size());
    p0[initial] = 1.0;
    return cascade_probabilities(g, p0);
}

CascadeProbabilities closed_cascade_flat(double Gamma, double gamma) {
    const double D = 2.0 * Gamma * Gamma + 15.0 * Gamma * gamma + 24.0 * gamma * gamma;
    CascadeProbabilities cp;
    cp.P[1] = 6.0 * gamma * gamma / D;
    cp.P[2] = (2.0 * Gamma * gamma + 6.0 * gamma * gamma) / D;
    cp.P[3] = cp.P[2];
    cp.P[0] = 1.0 - cp.P[1] - 2.0 * cp.P[2];
    cp.P1k[0] = 6.0 * gamma * gamma / D;
    cp.P1k[2] = (3.0 * Gamma * gamma + 6.0 * gamma * gamma) / D;
    cp.P1k[3] = cp.P1k[2];
    cp.P1k[1] = 1.0 - cp.P1k[0] - 2.0 * cp.P1k[2];
    return cp;
}

CascadeProbabilities closed_cascade_tall(double Gamma1, double Gamma2, double gamma) {
    const double Gt = Gamma1 + Gamma2;
    const double D = Gt * Gt + 9.0 * Gt * gamma + 16.0 * gamma * gamma;
    CascadeProbabilities cp;
    cp.P[1] = 4.0 * gamma * gamma / D;
    cp.P[2] = (Gt * gamma + 4.0 * gamma * gamma) / D;
    cp.P[3] = cp.P[2];
    cp.P[0] = 1.0 - cp.P[1] - 2.0 * cp.P[2];
    cp.P1k[0] = cp.P[1];  // P_11 = P_2 for tall dots
    cp.P1k[2] = (2.0 * Gt * gamma + 4.0 * gamma * gamma) / D;
    cp.P1k[3] = cp.P1k[2];
    cp.P1k[1] = 1.0 - cp.P1k[0] - 2.0 * cp.P1k[2];
    return cp;
}

double no_tunnel_pair_fraction(const DotParameters& p) {
    if (p.Gamma <= 0.0)
        throw std::domain_error("no_tunnel_pair_fraction requires Gamma > 0");
    return p.Gamma / (p.Gamma + 4.0 * p.gamma);
}

double mean_interphoton_time(const DotParameters& p, const LevelScheme& sch) {
    if (p.gamma == 0.0) return std::numeric_limits<double>::infinity();
    if (sch.is_tall()) {
        const double Gt = p.Gamma_t(), gm = p.gamma;
        return 8.0 / (9.0 * gm) + 2.0 / Gt +
               (2.0 / 9.0) * (5.0 * Gt + 24.0 * gm) /
                   (3.0 * Gt * Gt + 28.0 * Gt * gm + 48.0 * gm * gm);
    }
    return 1.0 / p.gamma + 2.0 / p.Gamma;
}

Eigen::VectorXd stationary_distribution(const RateGraph& g) {
    Eigen::MatrixXd A = g.generator();
    // Replace the first balance equation with the normalization.
    A.row(0).setOnes();
    Eigen::VectorXd b = Eigen::VectorXd::Zero(g.size());
    b[0] = 1.0;
    const Eigen::VectorXd pi = A.partialPivLu().solve(b);
    if (!pi.allFinite())
        throw NumericError("stationary distribution solve failed");
    return pi;
}

double steady_state_interphoton_time(const RateGraph& g) {
    const Eigen::VectorXd pi = stationary_distribution(g);
    double flux = 0.0;
    for (const auto& e : g.edges)
        if (e.kind == EdgeKind::Photon) flux += e.rate * pi[e.src];
    if (flux <= 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / flux;
}

}  // namespace qdot
