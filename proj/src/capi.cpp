#include "qdturnstile.h"

#include <cstdio>
#include <cstring>
#include <string>

#include "config.hpp"
#include "entangle.hpp"
#include "errors.hpp"
#include "cavity.hpp"
#include "kinetics.hpp"
#include "runner.hpp"
#include "thermal.hpp"
#include "trajectory.hpp"

namespace {

thread_local std::string g_last_error;

struct ModelImpl {
    qdot::RunConfig cfg;
    qdot::LevelScheme scheme;
};

struct SimImpl {
    qdot::TrajectoryStats stats;
};

qdt_status fail(qdt_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

template <typename F>
qdt_status guarded(F&& f) {
    try {
        return f();
    } catch (const qdot::ParseError& e) {
        return fail(QDT_ERROR_PARSE, e.what());
    } catch (const qdot::IoError& e) {
        return fail(QDT_ERROR_IO, e.what());
    } catch (const qdot::NumericError& e) {
        return fail(QDT_ERROR_NUMERIC, e.what());
    } catch (const std::domain_error& e) {
        return fail(QDT_ERROR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(QDT_ERROR_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(QDT_ERROR_NUMERIC, e.what());
    }
}

qdt_status require(bool cond, const char* what) {
    return cond ? QDT_OK : fail(QDT_ERROR_ARGUMENT, what);
}

void copy_density(const qdot::PolarizationDensity& d, double* re, double* im) {
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            re[4 * r + c] = d.rho(r, c).real();
            im[4 * r + c] = d.rho(r, c).imag();
        }
}

}  // namespace

extern "C" {

const char* qdt_status_name(qdt_status s) {
    switch (s) {
        case QDT_OK: return "ok";
        case QDT_ERROR_DOMAIN: return "domain error";
        case QDT_ERROR_PARSE: return "parse error";
        case QDT_ERROR_NUMERIC: return "numeric error";
        case QDT_ERROR_IO: return "io error";
        case QDT_ERROR_ARGUMENT: return "invalid argument";
        case QDT_ERROR_FAILED_CHECKS: return "validation checks failed";
    }
    return "unknown";
}

const char* qdt_last_error(void) { return g_last_error.c_str(); }

struct qdt_config {
    qdot::RunConfig cfg;
};

qdt_status qdt_config_create(qdt_config** out) {
    if (auto rc = require(out, "null output pointer")) return rc;
    return guarded([&] {
        *out = new qdt_config{};
        return QDT_OK;
    });
}

qdt_status qdt_config_load(const char* path, qdt_config** out) {
    if (auto rc = require(path && out, "null argument")) return rc;
    return guarded([&] {
        *out = new qdt_config{qdot::load_config_file(path)};
        return QDT_OK;
    });
}

qdt_status qdt_config_parse(const char* text, qdt_config** out) {
    if (auto rc = require(text && out, "null argument")) return rc;
    return guarded([&] {
        *out = new qdt_config{qdot::parse_config_text(text)};
        return QDT_OK;
    });
}

qdt_status qdt_config_set(qdt_config* cfg, const char* key, const char* value) {
    if (auto rc = require(cfg && key && value, "null argument")) return rc;
    return guarded([&] {
        qdot::config_set(cfg->cfg, key, value);
        return QDT_OK;
    });
}

qdt_status qdt_config_get(const qdt_config* cfg, const char* key, double* out) {
    if (auto rc = require(cfg && key && out, "null argument")) return rc;
    const qdot::DotParameters& d = cfg->cfg.dot;
    const std::string k = key;
    if (k == "E_e") *out = d.E_e;
    else if (k == "E_h") *out = d.E_h;
    else if (k == "V_ee") *out = d.V_ee;
    else if (k == "V_hh") *out = d.V_hh;
    else if (k == "V_eh_s") *out = d.V_eh_s;
    else if (k == "V_eh_a") *out = d.V_eh_a;
    else if (k == "V_x1") *out = d.V_x1;
    else if (k == "V_x2") *out = d.V_x2;
    else if (k == "Gamma") *out = d.Gamma;
    else if (k == "Gamma2") *out = d.Gamma2;
    else if (k == "gamma") *out = d.gamma;
    else if (k == "T") *out = d.T;
    else if (k == "V_bias") *out = d.V_bias;
    else if (k == "Phi_gate") *out = d.Phi_gate;
    else if (k == "m_e") *out = cfg->cfg.m_e;
    else if (k == "m_h") *out = cfg->cfg.m_h;
    else if (k == "seed") *out = static_cast<double>(cfg->cfg.seed);
    else if (k == "trajectories") *out = static_cast<double>(cfg->cfg.trajectories);
    else
        return fail(QDT_ERROR_ARGUMENT,
                    "key '" + k + "' is not readable through qdt_config_get");
    return QDT_OK;
}

void qdt_config_free(qdt_config* cfg) { delete cfg; }

struct qdt_model {
    ModelImpl impl;
};

qdt_status qdt_model_create(const qdt_config* cfg, qdt_model** out) {
    if (auto rc = require(cfg && out, "null argument")) return rc;
    return guarded([&] {
        qdot::check_parameters(cfg->cfg.dot);
        auto* m = new qdt_model{{cfg->cfg, qdot::scheme_of(cfg->cfg)}};
        *out = m;
        return QDT_OK;
    });
}

void qdt_model_free(qdt_model* m) { delete m; }

qdt_status qdt_model_scheme(const qdt_model* m, qdt_scheme* out) {
    if (auto rc = require(m && out, "null argument")) return rc;
    *out = static_cast<qdt_scheme>(m->impl.scheme.scheme_class);
    return QDT_OK;
}

qdt_status qdt_model_entanglement_capable(const qdt_model* m, int* out) {
    if (auto rc = require(m && out, "null argument")) return rc;
    *out = m->impl.scheme.entanglement_capable ? 1 : 0;
    return QDT_OK;
}

qdt_status qdt_level_energy(const qdt_model* m, int n_e, int n_h, int s, int t,
                            double* out) {
    if (auto rc = require(m && out, "null argument")) return rc;
    return guarded([&] {
        *out = qdot::level_energy(m->impl.cfg.dot, {n_e, n_h, s, t});
        return QDT_OK;
    });
}

qdt_status qdt_transition_frequencies(const qdt_model* m, double out[4]) {
    if (auto rc = require(m && out, "null argument")) return rc;
    return guarded([&] {
        const auto tt = qdot::transition_frequencies(m->impl.cfg.dot, m->impl.scheme);
        for (int k = 0; k < 4; ++k) out[k] = tt.omega[k];
        return QDT_OK;
    });
}

qdt_status qdt_exciton_splitting(const qdt_model* m, double* out) {
    if (auto rc = require(m && out, "null argument")) return rc;
    return guarded([&] {
        *out = qdot::exciton_splitting(m->impl.cfg.dot, m->impl.scheme);
        return QDT_OK;
    });
}

qdt_status qdt_occupations(const qdt_model* m, double* p_e, double* p_h) {
    if (auto rc = require(m && p_e && p_h, "null argument")) return rc;
    return guarded([&] {
        const auto occ = qdot::fermi_occupations(m->impl.cfg.dot);
        *p_e = occ.p_e;
        *p_h = occ.p_h;
        return QDT_OK;
    });
}

qdt_status qdt_mean_emission_time(const qdt_model* m, double* out) {
    if (auto rc = require(m && out, "null argument")) return rc;
    return guarded([&] {
        *out = qdot::mean_emission_time_thermal(m->impl.cfg.dot, m->impl.scheme);
        return QDT_OK;
    });
}

qdt_status qdt_cascade_probabilities(const qdt_model* m, double P[4],
                                     double P1k[4]) {
    if (auto rc = require(m && P && P1k, "null argument")) return rc;
    return guarded([&] {
        const auto g = qdot::build_rate_graph(m->impl.cfg.dot, m->impl.scheme, true);
        const auto cp = qdot::cascade_probabilities(g, g.index("biexciton"));
        for (int k = 0; k < 4; ++k) {
            P[k] = cp.P[k];
            P1k[k] = cp.P1k[k];
        }
        return QDT_OK;
    });
}

qdt_status qdt_no_tunnel_pair_fraction(const qdt_model* m, double* out) {
    if (auto rc = require(m && out, "null argument")) return rc;
    return guarded([&] {
        *out = qdot::no_tunnel_pair_fraction(m->impl.cfg.dot);
        return QDT_OK;
    });
}

qdt_status qdt_mean_interphoton_time(const qdt_model* m, double* closed_form,
                                     double* from_generator) {
    if (auto rc = require(m && (closed_form || from_generator), "null argument"))
        return rc;
    return guarded([&] {
        if (closed_form)
            *closed_form =
                qdot::mean_interphoton_time(m->impl.cfg.dot, m->impl.scheme);
        if (from_generator) {
            const auto g =
                qdot::build_rate_graph(m->impl.cfg.dot, m->impl.scheme, true);
            *from_generator = qdot::steady_state_interphoton_time(g);
        }
        return QDT_OK;
    });
}

qdt_status qdt_pair_fraction(const qdt_model* m, int filtered, double* out) {
    if (auto rc = require(m && out, "null argument")) return rc;
    return guarded([&] {
        *out = qdot::pair_fraction(filtered ? qdot::PairMode::Filtered
                                            : qdot::PairMode::Unfiltered,
                                   m->impl.scheme, m->impl.cfg.dot);
        return QDT_OK;
    });
}

qdt_status qdt_cascade_density(double Delta, double Gamma, double gamma,
                               double P, double rho_re[16], double rho_im[16]) {
    if (auto rc = require(rho_re && rho_im, "null argument")) return rc;
    return guarded([&] {
        copy_density(qdot::cascade_density(Delta, Gamma, gamma, P), rho_re, rho_im);
        return QDT_OK;
    });
}

qdt_status qdt_concurrence_entropy(double Delta, double Gamma, double gamma,
                                   double P, double* C, double* E) {
    if (auto rc = require(C && E, "null argument")) return rc;
    return guarded([&] {
        const auto rep = qdot::closed_concurrence_entropy(Delta, Gamma, gamma, P);
        *C = rep.concurrence;
        *E = rep.entropy;
        return QDT_OK;
    });
}

qdt_status qdt_wootters_concurrence(const double rho_re[16],
                                    const double rho_im[16], double* out) {
    if (auto rc = require(rho_re && rho_im && out, "null argument")) return rc;
    return guarded([&] {
        qdot::PolarizationDensity d;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                d.rho(r, c) = {rho_re[4 * r + c], rho_im[4 * r + c]};
        *out = qdot::wootters_concurrence(d);
        return QDT_OK;
    });
}

qdt_status qdt_cavity_density(double theta, double phi, double Gamma,
                              double Delta, double gamma, double rho_re[16],
                              double rho_im[16], double* pair_fraction) {
    if (auto rc = require(rho_re && rho_im, "null argument")) return rc;
    return guarded([&] {
        const auto cd = qdot::cavity_density({theta, phi, Gamma, Delta, gamma});
        copy_density(cd.density, rho_re, rho_im);
        if (pair_fraction) *pair_fraction = cd.pair_fraction;
        return QDT_OK;
    });
}

struct qdt_sim {
    SimImpl impl;
};

qdt_status qdt_simulate(const qdt_model* m, long n, unsigned long long seed,
                        int max_photons, int record, qdt_sim** out) {
    if (auto rc = require(m && out, "null argument")) return rc;
    return guarded([&] {
        const auto g = qdot::build_rate_graph(m->impl.cfg.dot, m->impl.scheme, true);
        qdot::SimulationOptions opts;
        opts.max_photons = max_photons;
        opts.record_streams = record != 0;
        auto* s = new qdt_sim{
            {qdot::simulate_trajectories(g, g.index("biexciton"), n, seed, opts)}};
        *out = s;
        return QDT_OK;
    });
}

qdt_status qdt_sim_estimate(const qdt_sim* s, const char* quantity,
                            double* value, double* std_error) {
    if (auto rc = require(s && quantity && value && std_error, "null argument"))
        return rc;
    const std::string q = quantity;
    qdot::Estimate e;
    if (q == "P1") e = s->impl.stats.P(1);
    else if (q == "P2") e = s->impl.stats.P(2);
    else if (q == "P3") e = s->impl.stats.P(3);
    else if (q == "P4") e = s->impl.stats.P(4);
    else if (q == "P11") e = s->impl.stats.P1(1);
    else if (q == "P12") e = s->impl.stats.P1(2);
    else if (q == "P13") e = s->impl.stats.P1(3);
    else if (q == "P14") e = s->impl.stats.P1(4);
    else if (q == "Pstar12") e = s->impl.stats.Pstar12();
    else
        return fail(QDT_ERROR_ARGUMENT, "unknown estimator '" + q + "'");
    *value = e.value;
    *std_error = e.std_error;
    return QDT_OK;
}

qdt_status qdt_sim_photon_count(const qdt_sim* s, long trajectory, long* out) {
    if (auto rc = require(s && out, "null argument")) return rc;
    const auto& streams = s->impl.stats.streams;
    if (trajectory < 0 || trajectory >= static_cast<long>(streams.size()))
        return fail(QDT_ERROR_ARGUMENT,
                    "trajectory index out of range (streams recorded?)");
    *out = static_cast<long>(streams[trajectory].size());
    return QDT_OK;
}

qdt_status qdt_sim_photon(const qdt_sim* s, long trajectory, long index,
                          double* time, int* transition) {
    if (auto rc = require(s && time && transition, "null argument")) return rc;
    const auto& streams = s->impl.stats.streams;
    if (trajectory < 0 || trajectory >= static_cast<long>(streams.size()))
        return fail(QDT_ERROR_ARGUMENT, "trajectory index out of range");
    const auto& st = streams[trajectory];
    if (index < 0 || index >= static_cast<long>(st.size()))
        return fail(QDT_ERROR_ARGUMENT, "photon index out of range");
    *time = st[index].time;
    *transition = st[index].transition;
    return QDT_OK;
}

void qdt_sim_free(qdt_sim* s) { delete s; }

qdt_status qdt_run(const qdt_config* cfg, const char* subcommand,
                   const char* out_dir) {
    if (auto rc = require(cfg && subcommand, "null argument")) return rc;
    return guarded([&] {
        const auto res = qdot::run_subcommand(
            subcommand, cfg->cfg, out_dir ? std::string(out_dir) : std::string("."));
        if (!res.report.empty()) {
            std::fputs(res.report.c_str(), stdout);
            if (res.report.back() != '\n') std::fputc('\n', stdout);
        }
        for (const auto& f : res.files_written)
            std::printf("wrote %s\n", f.c_str());
        return res.exit_code == 0 ? QDT_OK : QDT_ERROR_FAILED_CHECKS;
    });
}

}  // extern "C"
