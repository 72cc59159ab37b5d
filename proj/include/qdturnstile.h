/* C interface to the quantum-dot two-photon turnstile simulator.
 *
 * The library computes level energies, emission spectra, cascade photon
 * statistics and the polarization entanglement of biexciton-decay photon
 * pairs for small quantum dots, with an optional misaligned-microcavity
 * model for the lower cascade transition.
 *
 * All entry points return a qdt_status; on failure qdt_last_error() gives a
 * human-readable message for the calling thread. Handles are opaque and must
 * be released with the matching *_free function.
 */
#ifndef QDTURNSTILE_H
#define QDTURNSTILE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qdt_status {
    QDT_OK = 0,
    QDT_ERROR_DOMAIN = 1,    /* precondition violated (invalid state, range) */
    QDT_ERROR_PARSE = 2,     /* config syntax or unknown/malformed key */
    QDT_ERROR_NUMERIC = 3,   /* singular system, stalled trajectory, ... */
    QDT_ERROR_IO = 4,        /* file could not be read or written */
    QDT_ERROR_ARGUMENT = 5,  /* null pointer or out-of-range argument */
    QDT_ERROR_FAILED_CHECKS = 6 /* `validate` found failing invariants */
} qdt_status;

typedef enum qdt_scheme {
    QDT_SCHEME_FLAT_CYLINDRICAL = 0,
    QDT_SCHEME_TALL_CYLINDRICAL = 1,
    QDT_SCHEME_HIGH_M = 2,
    QDT_SCHEME_NO_SPIN_ORBIT = 3,
    QDT_SCHEME_GENERIC_TIME_REVERSAL = 4
} qdt_scheme;

const char *qdt_status_name(qdt_status s);

/* Message for the most recent failure on this thread ("" if none). */
const char *qdt_last_error(void);

/* ------------------------------------------------------------------ */
/* Configuration: flat `key = value` text with `#` comments.           */

typedef struct qdt_config qdt_config;

qdt_status qdt_config_create(qdt_config **out);              /* defaults */
qdt_status qdt_config_load(const char *path, qdt_config **out);
qdt_status qdt_config_parse(const char *text, qdt_config **out);
qdt_status qdt_config_set(qdt_config *cfg, const char *key, const char *value);
qdt_status qdt_config_get(const qdt_config *cfg, const char *key, double *out);
void qdt_config_free(qdt_config *cfg);

/* ------------------------------------------------------------------ */
/* Model: dot parameters plus the classified level scheme.             */

typedef struct qdt_model qdt_model;

qdt_status qdt_model_create(const qdt_config *cfg, qdt_model **out);
void qdt_model_free(qdt_model *m);

qdt_status qdt_model_scheme(const qdt_model *m, qdt_scheme *out);
qdt_status qdt_model_entanglement_capable(const qdt_model *m, int *out);

/* Level energy relative to the ground state. s and t are +-1 for the
 * one-exciton states (n_e = n_h = 1) and 0 otherwise. */
qdt_status qdt_level_energy(const qdt_model *m, int n_e, int n_h, int s, int t,
                            double *out);

/* Photon energies of cascade transitions 1..4 (out[0..3]). */
qdt_status qdt_transition_frequencies(const qdt_model *m, double out[4]);

qdt_status qdt_exciton_splitting(const qdt_model *m, double *out);

/* Fermi-Dirac occupations of the electron and hole orbitals. */
qdt_status qdt_occupations(const qdt_model *m, double *p_e, double *p_h);

/* Average photon emission time in the strong-tunneling thermal state;
 * +infinity when the dot is empty. */
qdt_status qdt_mean_emission_time(const qdt_model *m, double *out);

/* First-photon probabilities P_k and next-photon probabilities P_1k after a
 * transition-1 photon, from the linear solve over the resonant rate graph. */
qdt_status qdt_cascade_probabilities(const qdt_model *m, double P[4],
                                     double P1k[4]);

/* Gamma / (Gamma + 4 gamma): immediate-pair fraction of the cascade. */
qdt_status qdt_no_tunnel_pair_fraction(const qdt_model *m, double *out);

/* Mean time between photons in the steady state, from the closed form and
 * from the stationary flux of the full generator. Either output may be NULL. */
qdt_status qdt_mean_interphoton_time(const qdt_model *m, double *closed_form,
                                     double *from_generator);

/* Fraction of detected pairs that are the immediate 1-2 cascade;
 * filtered = 1 rejects photons from the charged-exciton transitions. */
qdt_status qdt_pair_fraction(const qdt_model *m, int filtered, double *out);

/* ------------------------------------------------------------------ */
/* Two-photon polarization density operators, basis {xx, xy, yx, yy};  */
/* matrices are row-major 4x4 split into real and imaginary parts.     */

qdt_status qdt_cascade_density(double Delta, double Gamma, double gamma,
                               double P, double rho_re[16], double rho_im[16]);

/* Concurrence and entanglement entropy of the cascade pair (closed form). */
qdt_status qdt_concurrence_entropy(double Delta, double Gamma, double gamma,
                                   double P, double *C, double *E);

qdt_status qdt_wootters_concurrence(const double rho_re[16],
                                    const double rho_im[16], double *out);

/* Misaligned-cavity density operator for the second photon; pair_fraction
 * receives the trace of the coherent term (may be NULL). */
qdt_status qdt_cavity_density(double theta, double phi, double Gamma,
                              double Delta, double gamma, double rho_re[16],
                              double rho_im[16], double *pair_fraction);

/* ------------------------------------------------------------------ */
/* Stochastic trajectories over the rate graph.                        */

typedef struct qdt_sim qdt_sim;

/* n trajectories from the biexciton, each until max_photons photons;
 * reproducible for a given seed. record != 0 keeps the photon streams. */
qdt_status qdt_simulate(const qdt_model *m, long n, unsigned long long seed,
                        int max_photons, int record, qdt_sim **out);

/* quantity: "P1".."P4", "P11".."P14", "Pstar12". */
qdt_status qdt_sim_estimate(const qdt_sim *s, const char *quantity,
                            double *value, double *std_error);

qdt_status qdt_sim_photon_count(const qdt_sim *s, long trajectory, long *out);
qdt_status qdt_sim_photon(const qdt_sim *s, long trajectory, long index,
                          double *time, int *transition);
void qdt_sim_free(qdt_sim *s);

/* ------------------------------------------------------------------ */
/* Whole-subcommand runner used by the CLI: spectrum | cascade |       */
/* entangle | cavity | simulate | validate. Writes CSV files into      */
/* out_dir and prints the run report to stdout.                        */

qdt_status qdt_run(const qdt_config *cfg, const char *subcommand,
                   const char *out_dir);

#ifdef __cplusplus
}
#endif

#endif /* QDTURNSTILE_H */
