#include "rate_graph.hpp"

#include <stdexcept>

namespace qdot {

int RateGraph::index(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (levels[i] == name) return i;
    throw std::invalid_argument("unknown level '" + name + "'");
}

Eigen::MatrixXd RateGraph::generator() const {
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(size(), size());
    for (const auto& e : edges) {
        A(e.dst, e.src) += e.rate;
        A(e.src, e.src) -= e.rate;
    }
    return A;
}

Eigen::MatrixXd RateGraph::loss_only_generator() const {
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(size(), size());
    for (const auto& e : edges) {
        if (e.kind == EdgeKind::Tunnel) A(e.dst, e.src) += e.rate;
        A(e.src, e.src) -= e.rate;
    }
    return A;
}

double RateGraph::total_rate_out(int level) const {
    double r = 0.0;
    for (const auto& e : edges)
        if (e.src == level) r += e.rate;
    return r;
}

RateGraph build_rate_graph(const DotParameters& p, const LevelScheme& sch,
                           bool at_resonance,
                           std::optional<TunnelingRates> rates) {
    if (sch.scheme_class != SchemeClass::FlatCylindrical &&
        sch.scheme_class != SchemeClass::TallCylindrical)
        throw std::domain_error(std::string("rate graph is defined for flat and "
                                            "tall dots, not ") +
                                scheme_name(sch.scheme_class));
    check_parameters(p);

    const double ge = rates ? rates->gamma_e : p.gamma;
    const double gh = rates ? rates->gamma_h : p.gamma;
    double pe = 0.5, ph = 0.5;
    if (!at_resonance) {
        const auto occ = fermi_occupations(p);
        pe = occ.p_e;
        ph = occ.p_h;
    }
    // Per-channel move rates; equal to the channel rate at resonance.
    const double ein = 2.0 * ge * pe, eout = 2.0 * ge * (1.0 - pe);
    const double hin = 2.0 * gh * ph, hout = 2.0 * gh * (1.0 - ph);

    const bool tall = sch.is_tall();
    RateGraph g;
    g.levels = {"ground",   "electron", "hole",      "electron2", "hole2",
                "exciton_bright", "exciton_dark", "trion_neg", "trion_pos",
                "biexciton"};
    g.multiplicity = {1, 2, 2, 1, 1, tall ? 3 : 2, tall ? 1 : 2, 2, 2, 1};

    const int G = 0, E1 = 1, H1 = 2, E2 = 3, H2 = 4, Xb = 5, Xd = 6, Tm = 7,
              Tp = 8, B = 9;

    auto tun = [&g](int s, int d, double r) {
        if (r > 0.0) g.edges.push_back({s, d, r, EdgeKind::Tunnel, 0});
    };
    auto photon = [&g](int s, int d, double r, int k) {
        if (r > 0.0) g.edges.push_back({s, d, r, EdgeKind::Photon, k});
    };

    // Fraction of an exciton-bound move landing in the bright multiplet.
    // Flat: the four basis excitons split evenly into the bright and dark
    // doublets. Tall: of the two target orbitals one yields a bright doublet
    // member, the other an equal mixture of the two M=0 singlets.
    const double fb = tall ? 0.75 : 0.5;

    tun(G, E1, 2.0 * ein);
    tun(G, H1, 2.0 * hin);

    tun(E1, G, eout);
    tun(E1, E2, ein);
    tun(E1, Xb, 2.0 * hin * fb);
    tun(E1, Xd, 2.0 * hin * (1.0 - fb));

    tun(H1, G, hout);
    tun(H1, H2, hin);
    tun(H1, Xb, 2.0 * ein * fb);
    tun(H1, Xd, 2.0 * ein * (1.0 - fb));

    tun(E2, E1, 2.0 * eout);
    tun(E2, Tm, 2.0 * hin);

    tun(H2, H1, 2.0 * hout);
    tun(H2, Tp, 2.0 * ein);

    for (int X : {Xb, Xd}) {
        tun(X, E1, hout);
        tun(X, H1, eout);
        tun(X, Tm, ein);
        tun(X, Tp, hin);
    }

    tun(Tm, E2, hout);
    tun(Tm, Xb, 2.0 * eout * fb);
    tun(Tm, Xd, 2.0 * eout * (1.0 - fb));
    tun(Tm, B, hin);

    tun(Tp, H2, eout);
    tun(Tp, Xb, 2.0 * hout * fb);
    tun(Tp, Xd, 2.0 * hout * (1.0 - fb));
    tun(Tp, B, ein);

    tun(B, Tp, 2.0 * eout);
    tun(B, Tm, 2.0 * hout);

    if (tall) {
        const double Gt = p.Gamma_t();
        // The lumped bright triplet (two doublet members at Gamma1, one
        // constructive M=0 singlet at 2 Gamma2) radiates at the multiplet
        // mean 2 Gamma_t / 3.
        photon(B, Xb, 2.0 * Gt, 1);
        photon(Xb, G, 2.0 * Gt / 3.0, 2);
        photon(Tp, H1, Gt, 3);
        photon(Tm, E1, Gt, 4);
    } else {
        photon(B, Xb, 2.0 * p.Gamma, 1);
        photon(Xb, G, p.Gamma, 2);
        photon(Tp, H1, p.Gamma, 3);
        photon(Tm, E1, p.Gamma, 4);
    }
    return g;
}

}  // namespace qdot
