#include "cqed/cqed.h"

#include <cstring>
#include <exception>
#include <string>

#include "cqed/emitter.hpp"
#include "cqed/entangler.hpp"
#include "cqed/scenario.hpp"
#include "cqed/types.hpp"

struct cqed_params {
    cqed::CavityParams value;
};

namespace {

thread_local std::string g_last_error;

cqed_status fail(cqed_status code, const char* what) {
    g_last_error = what ? what : "unknown error";
    return code;
}

template <class Fn>
cqed_status guarded(Fn&& fn) {
    try {
        fn();
        return CQED_OK;
    } catch (const std::invalid_argument& e) {
        return fail(CQED_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return fail(CQED_ERR_NUMERICAL, e.what());
    } catch (const std::exception& e) {
        return fail(CQED_ERR_NUMERICAL, e.what());
    }
}

cqed_herald_result convert(const cqed::HeraldResult& h) {
    cqed_herald_result out{};
    out.t = h.t;
    out.p_outside = h.p;
    out.fidelity = h.fidelity;
    out.p_overall = h.p_overall;
    out.n_unswapped = h.n_unswapped;
    out.n_reflect = h.n_reflect;
    out.n_swap = h.n_swap;
    out.p_emit_b = h.p_emit_b;
    out.fidelity_r = h.fidelity_r;
    out.fidelity_r_amp = h.fidelity_r_amp;
    out.p_cav = h.p_cav;
    return out;
}

}  // namespace

extern "C" {

const char* cqed_version_string(void) { return "cqed 0.1.0"; }

const char* cqed_last_error(void) { return g_last_error.c_str(); }

cqed_status cqed_params_create(double g, double kappa, double gamma,
                               double delta, cqed_params** out) {
    if (!out) return fail(CQED_ERR_INVALID_ARGUMENT, "out must not be NULL");
    return guarded([&] {
        cqed::CavityParams p{g, kappa, gamma, delta};
        p.validate();
        *out = new cqed_params{p};
    });
}

cqed_status cqed_params_create_mhz(double g_mhz, double kappa_mhz,
                                   double gamma_mhz, double delta_mhz,
                                   cqed_params** out) {
    if (!out) return fail(CQED_ERR_INVALID_ARGUMENT, "out must not be NULL");
    return guarded([&] {
        *out = new cqed_params{cqed::to_angular(
            g_mhz, kappa_mhz, gamma_mhz, delta_mhz,
            {cqed::UnitMode::physical})};
    });
}

void cqed_params_free(cqed_params* p) { delete p; }

cqed_status cqed_emission_probability(const cqed_params* p, double* p_cav) {
    if (!p || !p_cav) return fail(CQED_ERR_INVALID_ARGUMENT, "NULL argument");
    return guarded([&] { *p_cav = cqed::emission_probability(p->value); });
}

cqed_status cqed_emission_fwhm(const cqed_params* p, double* width) {
    if (!p || !width) return fail(CQED_ERR_INVALID_ARGUMENT, "NULL argument");
    return guarded([&] { *width = cqed::fwhm(p->value); });
}

cqed_status cqed_emission_spectrum(const cqed_params* p, double delta_omega,
                                   double* value) {
    if (!p || !value) return fail(CQED_ERR_INVALID_ARGUMENT, "NULL argument");
    return guarded(
        [&] { *value = cqed::emission_spectrum(p->value, delta_omega); });
}

cqed_status cqed_herald(const cqed_params* a, const cqed_params* b, double t,
                        int grid_points, double grid_half_width,
                        cqed_herald_result* out) {
    if (!a || !b || !out) return fail(CQED_ERR_INVALID_ARGUMENT, "NULL argument");
    if (grid_points < 0) {
        return fail(CQED_ERR_INVALID_ARGUMENT, "grid_points must be >= 0");
    }
    return guarded([&] {
        const std::size_t n =
            grid_points == 0 ? 4001 : static_cast<std::size_t>(grid_points);
        const auto grid = grid_half_width > 0.0
                              ? cqed::make_grid(grid_half_width, n)
                              : cqed::default_grid(a->value, n);
        const double p_cav = cqed::emission_probability(a->value);
        const auto state = cqed::synthesize(a->value, b->value, t, grid);
        *out = convert(cqed::herald(state, p_cav));
    });
}

cqed_status cqed_run_rb87(const char* out_dir, const char* config_path,
                          int grid_points, double grid_half_width,
                          cqed_rb87_summary* out) {
    if (!out) return fail(CQED_ERR_INVALID_ARGUMENT, "out must not be NULL");
    return guarded([&] {
        cqed::ScenarioConfig cfg;
        if (config_path) cfg = cqed::ScenarioConfig::load(config_path);
        cqed::RunOptions opts;
        opts.out_dir = out_dir ? out_dir : "";
        opts.grid_points =
            grid_points > 0 ? static_cast<std::size_t>(grid_points) : 0;
        opts.grid_width = grid_half_width > 0.0 ? grid_half_width : 0.0;

        const auto s = cqed::run_rb87(opts, cfg);
        cqed_rb87_summary res{};
        res.t_start_us = s.t_start_us;
        res.dt_wait_us = s.dt_wait_us;
        res.p_cav = s.p_cav;
        res.herald = convert(s.herald);
        res.win_p = s.win_p;
        res.win_fidelity = s.win_fidelity;
        res.headline_p = s.headline_p;
        res.headline_fidelity = s.headline_fidelity;
        res.headline_p_overall = s.headline_p_overall;
        *out = res;
    });
}

cqed_status cqed_run_figure(const char* figure_id, const char* out_dir,
                            int grid_points, double grid_half_width,
                            char* out_csv_path, size_t path_capacity) {
    if (!figure_id || !out_dir) {
        return fail(CQED_ERR_INVALID_ARGUMENT, "NULL argument");
    }
    return guarded([&] {
        cqed::RunOptions opts;
        opts.out_dir = out_dir;
        opts.grid_points =
            grid_points > 0 ? static_cast<std::size_t>(grid_points) : 0;
        opts.grid_width = grid_half_width > 0.0 ? grid_half_width : 0.0;
        const std::string path =
            cqed::run_figure(cqed::parse_figure_id(figure_id), opts);
        if (out_csv_path && path_capacity > 0) {
            std::strncpy(out_csv_path, path.c_str(), path_capacity - 1);
            out_csv_path[path_capacity - 1] = '\0';
        }
    });
}

cqed_status cqed_run_audit(uint64_t seed, int n_draws, const char* out_csv,
                           int* rows_failed) {
    if (!out_csv || !rows_failed) {
        return fail(CQED_ERR_INVALID_ARGUMENT, "NULL argument");
    }
    if (n_draws < 1) {
        return fail(CQED_ERR_INVALID_ARGUMENT, "n_draws must be >= 1");
    }
    return guarded([&] { *rows_failed = cqed::run_audit(seed, n_draws, out_csv); });
}

}  // extern "C"
