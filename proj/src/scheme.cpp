#include "scheme.hpp"

#include <cmath>
#include <stdexcept>

namespace qdot {

const char* scheme_name(SchemeClass c) {
    switch (c) {
        case SchemeClass::FlatCylindrical: return "FlatCylindrical";
        case SchemeClass::TallCylindrical: return "TallCylindrical";
        case SchemeClass::HighM: return "HighM";
        case SchemeClass::NoSpinOrbit: return "NoSpinOrbit";
        case SchemeClass::GenericTimeReversal: return "GenericTimeReversal";
    }
    return "?";
}

static bool is_half_odd_integer(double m) {
    const double two_m = 2.0 * m;
    const double r = std::round(two_m);
    return std::abs(two_m - r) < 1e-9 && std::lround(r) % 2 != 0;
}

static std::string m_label(double M, const char* parity = nullptr) {
    char buf[48];
    if (parity)
        std::snprintf(buf, sizeof buf, "X[M=%+g,%s]", M, parity);
    else
        std::snprintf(buf, sizeof buf, "X[M=%+g]", M);
    return buf;
}

LevelScheme classify_scheme(double m_e, double m_h, bool spin_orbit, Symmetry sym) {
    if (!is_half_odd_integer(m_e) || !is_half_odd_integer(m_h) ||
        m_e < 0.5 || m_h < 0.5)
        throw std::domain_error("m_e, m_h must be half-odd integers >= 1/2");

    LevelScheme sch;
    sch.m_e = m_e;
    sch.m_h = m_h;

    if (sym == Symmetry::None) {
        if (spin_orbit) {
            sch.scheme_class = SchemeClass::GenericTimeReversal;
            sch.bright_excitons = {"X[eh+]", "X[eh-]", "X[eh~+]", "X[eh~-]"};
            sch.dark_excitons = {};
            // Exciton levels are nondegenerate; no indistinguishable pair of
            // cascade paths exists.
            sch.entanglement_capable = false;
        } else {
            sch.scheme_class = SchemeClass::NoSpinOrbit;
            sch.bright_excitons = {"X[S=0]"};
            sch.dark_excitons = {"X[S=1,M=-1]", "X[S=1,M=0]", "X[S=1,M=+1]"};
            sch.entanglement_capable = false;
        }
        return sch;
    }

    const double dm = std::abs(m_e - m_h);
    const double Mdark = m_e + m_h;
    if (std::abs(dm - 1.0) < 1e-9) {
        sch.scheme_class = SchemeClass::FlatCylindrical;
        sch.bright_excitons = {m_label(-1), m_label(+1)};
        sch.dark_excitons = {m_label(-Mdark), m_label(+Mdark)};
        sch.entanglement_capable = true;
    } else if (dm < 1e-9 && std::abs(m_e - 0.5) < 1e-9) {
        sch.scheme_class = SchemeClass::TallCylindrical;
        sch.bright_excitons = {m_label(-1), m_label(+1), m_label(0, "even")};
        sch.dark_excitons = {m_label(0, "odd")};
        sch.entanglement_capable = true;
    } else if (dm < 1e-9) {
        sch.scheme_class = SchemeClass::HighM;
        sch.bright_excitons = {m_label(0, "even")};
        sch.dark_excitons = {m_label(0, "odd"), m_label(-Mdark), m_label(+Mdark)};
        sch.entanglement_capable = false;
    } else {
        throw std::domain_error(
            "axially symmetric dot with |m_e - m_h| >= 2 has no dipole-allowed "
            "exciton transition");
    }
    return sch;
}

double cascade_exciton_energy(const DotParameters& p, const LevelScheme& sch) {
    switch (sch.scheme_class) {
        case SchemeClass::FlatCylindrical:
            // bright |M|=1 doublet = antiparallel-pair sector (s = -1)
            return 0.5 * (level_energy(p, {1, 1, -1, +1}) +
                          level_energy(p, {1, 1, -1, -1}));
        case SchemeClass::TallCylindrical:
        case SchemeClass::GenericTimeReversal:
            // bright |M|=1 doublet = parallel-pair sector (s = +1)
            return 0.5 * (level_energy(p, {1, 1, +1, +1}) +
                          level_energy(p, {1, 1, +1, -1}));
        case SchemeClass::HighM:
        case SchemeClass::NoSpinOrbit:
            // single bright state: the time-even antiparallel singlet
            return level_energy(p, {1, 1, -1, +1});
    }
    throw std::domain_error("unknown scheme class");
}

double tall_singlet_energy(const DotParameters& p) {
    return level_energy(p, {1, 1, -1, +1});
}

TransitionTable transition_frequencies(const DotParameters& p, const LevelScheme& sch) {
    if (sch.bright_excitons.empty())
        throw std::domain_error(std::string("scheme ") +
                                scheme_name(sch.scheme_class) +
                                " has no bright exciton");
    const double E_XX = level_energy(p, {2, 2, 0, 0});
    const double E_X = cascade_exciton_energy(p, sch);
    const double E_Tp = level_energy(p, {1, 2, 0, 0});
    const double E_Tm = level_energy(p, {2, 1, 0, 0});
    const double E_e = level_energy(p, {1, 0, 0, 0});
    const double E_h = level_energy(p, {0, 1, 0, 0});

    TransitionTable tt;
    tt.omega = {E_XX - E_X, E_X, E_Tp - E_h, E_Tm - E_e};
    tt.source = {"XX", "X_bright", "T+", "T-"};
    tt.target = {"X_bright", "G", "h", "e"};
    return tt;
}

double exciton_splitting(const DotParameters& p, const LevelScheme& sch) {
    if (!sch.entanglement_capable)
        throw std::domain_error(std::string("scheme ") +
                                scheme_name(sch.scheme_class) +
                                " has no bright doublet to split");
    return sch.is_tall() ? 2.0 * p.V_x2 : 2.0 * p.V_x1;
}

}  // namespace qdot
