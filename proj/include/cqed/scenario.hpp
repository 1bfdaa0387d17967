#ifndef CQED_SCENARIO_HPP
#define CQED_SCENARIO_HPP

#include <cstdint>
#include <string>

#include "cqed/entangler.hpp"
#include "cqed/types.hpp"

namespace cqed {

// Flat key-value scenario file, TOML-style sections per cavity. Values are
// rates over 2 pi in MHz when units = physical, raw angular rates otherwise.
struct ScenarioConfig {
    UnitMode units = UnitMode::physical;
    double a_g = 1.2, a_kappa = 15.0, a_gamma = 1.5, a_delta = 0.0;
    double b_g = 15.0, b_kappa = 6.0, b_gamma = 3.0, b_delta = 0.0;
    std::size_t grid_points = 4001;
    double grid_width_mult = 40.0;
    double t_start_units = 2.05;   // in 1 / (kappa_b / 2)
    double wait_units = 14.95;

    CavityParams cavity_a() const;
    CavityParams cavity_b() const;

    std::string serialize() const;
    // Line- and field-precise parse errors ("<name>:<line>: message").
    static ScenarioConfig parse(const std::string& text,
                                const std::string& name = "<config>");
    static ScenarioConfig load(const std::string& path);

    bool operator==(const ScenarioConfig&) const = default;
};

enum class FigureId { fig2, fig3, fig4, fig5, fig6, rb87, audit };

FigureId parse_figure_id(const std::string& id);
std::string figure_id_name(FigureId id);

struct RunOptions {
    std::string out_dir = "out";
    std::size_t grid_points = 0;  // 0 = scenario default
    double grid_width = 0.0;      // absolute half-width; 0 = auto (40 FWHM)
};

// Regenerates one figure's data as CSV; returns the path written.
std::string run_figure(FigureId id, const RunOptions& opts,
                       const ScenarioConfig& config = {});

// The rubidium-87 D2 scenario. All times in microseconds.
struct Rb87Summary {
    CavityParams a, b;
    double p_cav = 0;
    double t_start_us = 0;
    double dt_wait_us = 0;
    HeraldResult herald;        // frequency-domain quantities at window end
    double win_p = 0;           // time-domain click probability in the window
    double win_fidelity = 0;    // singlet weight of the windowed click mixture
    double headline_p = 0;      // reported convention, see README
    double headline_fidelity = 0;
    double headline_p_overall = 0;
};

Rb87Summary run_rb87(const RunOptions& opts, const ScenarioConfig& config = {});

// Writes the oracle comparison report; returns the number of failed rows.
int run_audit(std::uint64_t seed, int n_draws, const std::string& csv_path);

}  // namespace cqed

#endif
