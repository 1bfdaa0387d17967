/*
 * C interface to the cqed engine. The library computes single-excitation
 * cavity-QED dynamics: photon emission from an atom-cavity node, polarised
 * single-photon scattering off a second node, and the heralded two-atom
 * entangled state this produces.
 *
 * Usage pattern: create opaque parameter handles, call computation entry
 * points, free the handles. Every function returns a cqed_status; on a
 * non-zero status cqed_last_error() carries a human-readable message for
 * the calling thread.
 */

#ifndef CQED_CQED_H
#define CQED_CQED_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cqed_status {
    CQED_OK = 0,
    CQED_ERR_INVALID_ARGUMENT = 1,
    CQED_ERR_NUMERICAL = 2,
    CQED_ERR_IO = 3
} cqed_status;

/* One cavity's rates, in angular units. Opaque. */
typedef struct cqed_params cqed_params;

const char* cqed_version_string(void);

/* Thread-local message describing the most recent failure. */
const char* cqed_last_error(void);

/* Angular rates in a common unit (rad per time unit). */
cqed_status cqed_params_create(double g, double kappa, double gamma,
                               double delta, cqed_params** out);

/* Rates quoted as value/2pi in MHz; angular rad/us internally, times in us. */
cqed_status cqed_params_create_mhz(double g_mhz, double kappa_mhz,
                                   double gamma_mhz, double delta_mhz,
                                   cqed_params** out);

void cqed_params_free(cqed_params* p);

cqed_status cqed_emission_probability(const cqed_params* p, double* p_cav);
cqed_status cqed_emission_fwhm(const cqed_params* p, double* width);
cqed_status cqed_emission_spectrum(const cqed_params* p, double delta_omega,
                                   double* value);

/* Heralding quantities of the two-node scheme at time t (see README for the
 * conventions carried side by side). */
typedef struct cqed_herald_result {
    double t;
    double p_outside;      /* photon-outside norm N(t) */
    double fidelity;       /* singlet weight of photon-traced state / N */
    double p_overall;      /* p_cav * N(t) */
    double n_unswapped, n_reflect, n_swap;
    double p_emit_b;       /* swap-channel emission probability */
    double fidelity_r;     /* singlet weight within the R-polarised sector */
    double fidelity_r_amp; /* sqrt(fidelity_r) */
    double p_cav;
} cqed_herald_result;

/* grid_points = 0 selects the default 4001; grid_half_width = 0 selects the
 * automatic 40-FWHM window. */
cqed_status cqed_herald(const cqed_params* a, const cqed_params* b, double t,
                        int grid_points, double grid_half_width,
                        cqed_herald_result* out);

typedef struct cqed_rb87_summary {
    double t_start_us;
    double dt_wait_us;
    double p_cav;
    cqed_herald_result herald;
    double win_p;          /* time-domain click probability in the window */
    double win_fidelity;
    double headline_p;
    double headline_fidelity;
    double headline_p_overall;
} cqed_rb87_summary;

/* out_dir may be NULL to skip the CSV. config_path may be NULL for the
 * built-in rubidium-87 defaults. */
cqed_status cqed_run_rb87(const char* out_dir, const char* config_path,
                          int grid_points, double grid_half_width,
                          cqed_rb87_summary* out);

/* figure_id: one of "fig2", "fig3", "fig4", "fig5", "fig6", "rb87", "audit".
 * Writes <out_dir>/<figure_id>.csv and copies the path into out_csv_path
 * when given. */
cqed_status cqed_run_figure(const char* figure_id, const char* out_dir,
                            int grid_points, double grid_half_width,
                            char* out_csv_path, size_t path_capacity);

/* Seeded oracle cross-check; *rows_failed receives the failing row count. */
cqed_status cqed_run_audit(uint64_t seed, int n_draws, const char* out_csv,
                           int* rows_failed);

#ifdef __cplusplus
}
#endif

#endif
