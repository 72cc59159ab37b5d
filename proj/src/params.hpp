#pragma once

#include <string>
#include <vector>

namespace qdot {

// Dot parameters. Energies are dimensionless in units of the radiative rate
// Gamma by default (Gamma = 1 sets the time unit); an optional display scale
// is applied at output time only.
//
// Sign convention: the direct electron-hole elements V_eh_s (parallel pair)
// and V_eh_a (antiparallel pair) are attractive and entered as values <= 0.
struct DotParameters {
    double E_e = 600.0;   // quasi-particle electron level
    double E_h = 400.0;   // quasi-particle hole level
    double V_ee = 5.0;    // electron-electron repulsion, > 0
    double V_hh = 8.0;    // hole-hole repulsion, > V_ee
    double V_eh_s = -3.0; // direct element, parallel electron-hole pair
    double V_eh_a = -3.0; // direct element, antiparallel pair
    double V_x1 = 0.0;    // exchange element (parallel-pair sector)
    double V_x2 = 0.0;    // exchange element (antiparallel-pair sector)
    double Gamma = 1.0;   // spontaneous emission rate (Gamma_1 for tall dots)
    double Gamma2 = 1.0;  // second radiative channel, tall dots only
    double gamma = 0.01;  // single-channel tunneling rate
    double T = 1.0;       // k_B T, energy units
    double V_bias = 1006.0;   // e V
    double Phi_gate = 100.0;  // e Phi

    double Gamma_t() const { return Gamma + Gamma2; }
};

// Throws std::domain_error on hard violations (negative rates, T <= 0).
void check_parameters(const DotParameters& p);

// Soft checks; returns one warning string per violated expectation
// (V_hh > V_ee > 0, attractive electron-hole elements).
std::vector<std::string> parameter_warnings(const DotParameters& p);

}  // namespace qdot
