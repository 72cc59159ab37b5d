#include "states.hpp"

#include <set>
#include <stdexcept>

namespace qdot {

bool state_is_valid(const DotState& st) {
    if (st.n_e < 0 || st.n_e > 2 || st.n_h < 0 || st.n_h > 2) return false;
    if (st.n_e == 1 && st.n_h == 1)
        return (st.s == 1 || st.s == -1) && (st.t == 1 || st.t == -1);
    return st.s == 0 && st.t == 0;
}

static std::string state_label(const DotState& st) {
    if (st.n_e == 1 && st.n_h == 1) {
        std::string lbl = st.s > 0 ? "X[eh" : "X[eh~";
        lbl += st.t > 0 ? "+]" : "-]";
        return lbl;
    }
    static const char* names[3][3] = {
        {"G", "h", "2h"},
        {"e", nullptr, "T+"},
        {"2e", "T-", "XX"},
    };
    return names[st.n_e][st.n_h];
}

std::vector<StateInfo> enumerate_states() {
    std::vector<StateInfo> out;
    for (int ne = 0; ne <= 2; ++ne) {
        for (int nh = 0; nh <= 2; ++nh) {
            const int charge = nh - ne;
            if (ne == 1 && nh == 1) {
                for (int s : {+1, -1})
                    for (int t : {+1, -1}) {
                        DotState st{ne, nh, s, t};
                        out.push_back({st, 1, charge, state_label(st)});
                    }
            } else {
                DotState st{ne, nh, 0, 0};
                const int mult = (charge == 1 || charge == -1) ? 2 : 1;
                out.push_back({st, mult, charge, state_label(st)});
            }
        }
    }
    return out;
}

int count_energy_levels(const std::vector<StateInfo>& states) {
    std::set<std::pair<int, int>> classes;
    for (const auto& si : states)
        classes.insert({si.state.n_e, si.state.n_h});
    return static_cast<int>(classes.size());
}

double level_energy(const DotParameters& p, const DotState& st) {
    if (!state_is_valid(st))
        throw std::domain_error("invalid dot state (n_e=" +
                                std::to_string(st.n_e) + ", n_h=" +
                                std::to_string(st.n_h) + ", s=" +
                                std::to_string(st.s) + ", t=" +
                                std::to_string(st.t) + ")");
    const double ne = st.n_e, nh = st.n_h, s = st.s, t = st.t;
    return p.E_e * ne + p.E_h * nh
        + 0.5 * (ne - 1.0) * ne * p.V_ee
        + 0.5 * (nh - 1.0) * nh * p.V_hh
        + (s - 0.5 * ne * nh) * (p.V_eh_s + p.V_eh_a)
        + 0.5 * s * s * (p.V_eh_s - p.V_eh_a)
        + 0.5 * (1.0 + s) * t * p.V_x1
        + 0.5 * (1.0 - s) * t * p.V_x2;
}

}  // namespace qdot
