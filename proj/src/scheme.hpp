#pragma once

#include <array>
#include <string>
#include <vector>

#include "params.hpp"
#include "states.hpp"

namespace qdot {

// Level-scheme classes for the one-exciton multiplet of a small dot.
// Cylindrical dots split into three cases by the magnetic quantum numbers
// m_e, m_h of the active electron and hole level; without spatial symmetry
// the classification depends on whether spin-orbit coupling is present.
enum class SchemeClass {
    FlatCylindrical,      // |m_e - m_h| = 1: bright |M|=1 doublet, dark |M|=m_e+m_h doublet
    TallCylindrical,      // m_e = m_h = 1/2: bright doublet + bright M=0 singlet, dark M=0 singlet
    HighM,                // m_e = m_h > 1/2: single bright singlet
    NoSpinOrbit,          // spin singlet/triplet, one bright S=0 state
    GenericTimeReversal,  // time-reversal degeneracy only, all four excitons bright
};

enum class Symmetry { Axial, None };

const char* scheme_name(SchemeClass c);

struct LevelScheme {
    SchemeClass scheme_class = SchemeClass::FlatCylindrical;
    double m_e = 0.5;
    double m_h = 1.5;
    std::vector<std::string> bright_excitons;
    std::vector<std::string> dark_excitons;
    bool entanglement_capable = true;

    bool is_tall() const { return scheme_class == SchemeClass::TallCylindrical; }
};

// Assigns the scheme class and the bright/dark splitting of the four exciton
// states. Dipole transitions require |m_e - m_h| <= 1, excitons with
// |M| = m_e + m_h > 1 are dark, and for m_e = m_h the time-odd M=0 exciton is
// dark (time-reversal property of the z dipole). m_e, m_h must be half-odd
// integers >= 1/2; axial symmetry with |m_e - m_h| >= 2 leaves no bright
// exciton and is rejected.
LevelScheme classify_scheme(double m_e, double m_h, bool spin_orbit, Symmetry sym);

// Photon energies of the four cascade transitions.
//   omega_1: biexciton -> bright exciton     omega_2: bright exciton -> ground
//   omega_3: positive trion (e h hbar) -> h  omega_4: negative trion (e ebar h) -> e
// For doublets omega_1/omega_2 refer to the doublet center; the exchange
// splitting is reported separately by exciton_splitting().
struct TransitionTable {
    std::array<double, 4> omega{};  // omega[k] is transition k+1
    std::array<std::string, 4> source{};
    std::array<std::string, 4> target{};
};

TransitionTable transition_frequencies(const DotParameters& p, const LevelScheme& sch);

// Exchange splitting of the bright exciton doublet: 2 V_x1 for flat dots,
// 2 V_x2 for tall dots. Throws for schemes that cannot produce entangled
// pairs (no bright doublet to split).
double exciton_splitting(const DotParameters& p, const LevelScheme& sch);

// Energy of the exciton level the cascade passes through (doublet center).
double cascade_exciton_energy(const DotParameters& p, const LevelScheme& sch);

// Energy of the bright M=0 singlet of a tall dot (the second cascade path).
double tall_singlet_energy(const DotParameters& p);

}  // namespace qdot
