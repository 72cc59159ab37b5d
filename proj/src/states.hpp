#pragma once

#include <string>
#include <vector>

#include "params.hpp"

namespace qdot {

// Basis state of the two-level dot model: n_e electrons in the upper level,
// n_h holes in the lower level (0..2 each). For the one-exciton states
// (n_e = n_h = 1) the quantum numbers s = +1/-1 select the parallel (|eh t>)
// or antiparallel (|e hbar t>) pair sector and t = +1/-1 the time-even/odd
// combination; all other occupations carry s = t = 0.
struct DotState {
    int n_e = 0;
    int n_h = 0;
    int s = 0;
    int t = 0;
};

bool state_is_valid(const DotState& st);

struct StateInfo {
    DotState state;
    int multiplicity;  // 2 for the Kramers doublets of charge +-1, else 1
    int charge;        // n_h - n_e, units of e
    std::string label;
};

// All sixteen basis states of the model, one entry per distinct
// (n_e, n_h, s, t); doublets are carried through the multiplicity field.
std::vector<StateInfo> enumerate_states();

// Number of distinct (n_e, n_h) occupation classes (the "levels" that remain
// distinct before Coulomb splitting of the exciton multiplet).
int count_energy_levels(const std::vector<StateInfo>& states);

// Level energy relative to the ground state, closed form:
//   E = E_e n_e + E_h n_h + (n_e-1)n_e V_ee/2 + (n_h-1)n_h V_hh/2
//     + (s - n_e n_h/2)(V_eh_s + V_eh_a) + s^2 (V_eh_s - V_eh_a)/2
//     + (1+s)t V_x1/2 + (1-s)t V_x2/2
// Throws std::domain_error for invalid (s, t) combinations.
double level_energy(const DotParameters& p, const DotState& st);

}  // namespace qdot
