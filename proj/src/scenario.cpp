#include "cqed/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cqed/csv.hpp"
#include "cqed/emitter.hpp"
#include "cqed/oracle.hpp"
#include "cqed/parallel.hpp"

namespace cqed {

namespace {

constexpr const char* kVersion = "cqed 0.1.0";

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& where, const std::string& value) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(where + ": not a number: '" + value + "'");
    }
    if (used != value.size()) {
        throw std::invalid_argument(where + ": trailing characters in '" + value + "'");
    }
    return v;
}

std::string format_complex(cplx v) {
    std::string s = CsvWriter::format(std::real(v));
    const double im = std::imag(v);
    s += (im < 0 ? "-" : "+");
    s += CsvWriter::format(std::abs(im));
    s += "j";
    return s;
}

std::filesystem::path prepare_out(const std::string& out_dir,
                                  const std::string& filename) {
    std::filesystem::path dir(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory " + out_dir +
                                 ": " + ec.message());
    }
    return dir / filename;
}

FrequencyGrid grid_for(const CavityParams& a, const ScenarioConfig& cfg,
                       const RunOptions& opts) {
    const std::size_t n = opts.grid_points ? opts.grid_points : cfg.grid_points;
    if (opts.grid_width > 0.0) {
        return make_grid(opts.grid_width, n);
    }
    return default_grid(a, n, cfg.grid_width_mult);
}

void common_meta(CsvWriter& csv, const CavityParams& a, const CavityParams& b,
                 const FrequencyGrid* grid, const RunOptions& opts) {
    csv.meta("code_version", kVersion);
    csv.meta("g1", a.g);
    csv.meta("kappa1", a.kappa);
    csv.meta("gamma1", a.gamma);
    csv.meta("delta1", a.delta);
    csv.meta("g2", b.g);
    csv.meta("kappa2", b.kappa);
    csv.meta("gamma2", b.gamma);
    csv.meta("delta2", b.delta);
    if (grid) {
        csv.meta("grid_points", static_cast<double>(grid->size()));
        csv.meta("grid_half_width", grid->half_width);
    }
    csv.meta("grid_points_override", static_cast<double>(opts.grid_points));
    csv.meta("grid_width_override", opts.grid_width);
}

struct EmitterSweepRow {
    double x, p_cav, width;
};

std::string write_emitter_sweep(FigureId id, const RunOptions& opts) {
    const bool vs_g = (id == FigureId::fig2);
    const double kappa1 = 5.0;
    const double axis_unit = kappa1 / 5.0;

    std::vector<double> axis;
    if (vs_g) {
        for (double x = 0.02; x <= 0.8601; x += 0.02) axis.push_back(x);
    } else {
        for (double x = 0.02; x <= 1.0001; x += 0.02) axis.push_back(x);
    }

    std::vector<EmitterSweepRow> rows(axis.size());
    parallel_for(axis.size(), [&](std::size_t i) {
        CavityParams p;
        p.kappa = kappa1;
        if (vs_g) {
            p.gamma = 0.05;
            p.g = axis[i] * axis_unit;
        } else {
            p.gamma = axis[i] * axis_unit;
            p.g = (p.kappa - p.gamma) / (8.0 * std::sqrt(2.0));
        }
        rows[i] = {axis[i], emission_probability(p), fwhm(p)};
    });

    const auto path =
        prepare_out(opts.out_dir, figure_id_name(id) + ".csv");
    CsvWriter csv(path.string());
    csv.meta("code_version", kVersion);
    csv.meta("kappa1", kappa1);
    if (vs_g) {
        csv.meta("gamma1", 0.05);
    } else {
        csv.meta("g1_rule", "(kappa1 - gamma1) / (8 sqrt(2))");
    }
    csv.meta("x_axis_unit", "kappa1 / 5");
    csv.meta("grid_points_override", static_cast<double>(opts.grid_points));
    csv.meta("grid_width_override", opts.grid_width);
    if (vs_g) {
        csv.header({"g1", "g1_over_kappa1_fifth", "p_cav", "fwhm"});
        for (std::size_t i = 0; i < rows.size(); ++i) {
            csv.row({rows[i].x * axis_unit, rows[i].x, rows[i].p_cav,
                     rows[i].width});
        }
    } else {
        csv.header({"gamma1", "gamma1_over_kappa1_fifth", "p_cav", "fwhm"});
        for (std::size_t i = 0; i < rows.size(); ++i) {
            csv.row({rows[i].x * axis_unit, rows[i].x, rows[i].p_cav,
                     rows[i].width});
        }
    }
    return path.string();
}

CavityParams fig4_cavity_a() {
    CavityParams a;
    a.kappa = 5.0;
    a.gamma = 0.5;
    a.g = (a.kappa - a.gamma) / (8.0 * std::sqrt(2.0));
    return a;
}

CavityParams fig4_cavity_b() {
    CavityParams b;
    b.kappa = 2.0;
    b.gamma = 1.0;
    b.g = 5.0;
    return b;
}

std::string write_fig4(const RunOptions& opts, const ScenarioConfig& cfg) {
    const CavityParams a = fig4_cavity_a();
    const CavityParams b = fig4_cavity_b();
    const double unit = 1.0 / (0.5 * b.kappa);  // caption time unit

    std::vector<double> t_grid;
    for (double x = 0.0; x <= 20.0001; x += 0.25) t_grid.push_back(x * unit);

    const auto grid = grid_for(a, cfg, opts);
    const auto results = fidelity_vs_time(a, b, t_grid, grid);

    const auto path = prepare_out(opts.out_dir, "fig4.csv");
    CsvWriter csv(path.string());
    common_meta(csv, a, b, &grid, opts);
    csv.meta("x_axis_unit", "2 / kappa2 (equivalently kappa2 / 2 = 1 here)");
    csv.header({"t", "t_times_half_kappa2", "t_over_half_kappa2", "fidelity",
                "fidelity_r", "fidelity_r_amp", "p_outside", "p_emit_b"});
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const auto& h = results[i];
        csv.row({t_grid[i], t_grid[i] * 0.5 * b.kappa,
                 t_grid[i] / (0.5 * b.kappa), h.fidelity, h.fidelity_r,
                 h.fidelity_r_amp, h.p, h.p_emit_b});
    }
    return path.string();
}

std::string write_gamma_sweep(FigureId id, const RunOptions& opts,
                              const ScenarioConfig& cfg) {
    CavityParams a_template = fig4_cavity_a();
    const CavityParams b = fig4_cavity_b();

    std::vector<double> gamma1;
    for (double x = 0.05; x <= 1.0001; x += 0.05) {
        gamma1.push_back(x * 0.5 * b.kappa);
    }

    // grid overrides are honoured through the sweep's per-point grids only
    // when an absolute width is requested; otherwise each point refines its
    // own 40-FWHM window.
    std::vector<GammaSweepPoint> pts(gamma1.size());
    parallel_for(gamma1.size(), [&](std::size_t i) {
        CavityParams a = a_template;
        a.gamma = gamma1[i];
        a.g = (a.kappa - a.gamma) / (8.0 * std::sqrt(2.0));
        const double p_cav = emission_probability(a);
        const auto grid = grid_for(a, cfg, opts);
        const auto s = spectral_amplitude(a, grid);
        const double t_end =
            (cfg.t_start_units + cfg.wait_units) / (0.5 * b.kappa);

        CavityParams b0 = b;
        b0.gamma = 0.0;
        GammaSweepPoint pt;
        pt.gamma1 = a.gamma;
        pt.with_gamma2_zero = PacketScatterModel(s, b0, kInvSqrt2, kInvSqrt2)
                                  .herald_at(t_end, p_cav);
        pt.with_gamma2 =
            PacketScatterModel(s, b, kInvSqrt2, kInvSqrt2).herald_at(t_end, p_cav);
        pts[i] = pt;
    });

    const bool fidelity_fig = (id == FigureId::fig5);
    const auto path =
        prepare_out(opts.out_dir, figure_id_name(id) + ".csv");
    CsvWriter csv(path.string());
    common_meta(csv, a_template, b, nullptr, opts);
    csv.meta("g1_rule", "(kappa1 - gamma1) / (8 sqrt(2))");
    csv.meta("x_axis_unit", "kappa2 / 2");
    csv.meta("t_eval",
             (cfg.t_start_units + cfg.wait_units) / (0.5 * b.kappa));
    if (fidelity_fig) {
        csv.header({"gamma1", "gamma1_over_half_kappa2",
                    "fidelity_gamma2_0", "fidelity_gamma2_1",
                    "fidelity_r_gamma2_0", "fidelity_r_gamma2_1"});
        for (const auto& pt : pts) {
            csv.row({pt.gamma1, pt.gamma1 / (0.5 * b.kappa),
                     pt.with_gamma2_zero.fidelity, pt.with_gamma2.fidelity,
                     pt.with_gamma2_zero.fidelity_r, pt.with_gamma2.fidelity_r});
        }
    } else {
        csv.header({"gamma1", "gamma1_over_half_kappa2", "p_emit_b_gamma2_0",
                    "p_emit_b_gamma2_1", "p_outside_gamma2_0",
                    "p_outside_gamma2_1"});
        for (const auto& pt : pts) {
            csv.row({pt.gamma1, pt.gamma1 / (0.5 * b.kappa),
                     pt.with_gamma2_zero.p_emit_b, pt.with_gamma2.p_emit_b,
                     pt.with_gamma2_zero.p, pt.with_gamma2.p});
        }
    }
    return path.string();
}

}  // namespace

CavityParams ScenarioConfig::cavity_a() const {
    if (units == UnitMode::physical) {
        return to_angular(a_g, a_kappa, a_gamma, a_delta, {UnitMode::physical});
    }
    CavityParams p{a_g, a_kappa, a_gamma, a_delta};
    p.validate();
    return p;
}

CavityParams ScenarioConfig::cavity_b() const {
    if (units == UnitMode::physical) {
        return to_angular(b_g, b_kappa, b_gamma, b_delta, {UnitMode::physical});
    }
    CavityParams p{b_g, b_kappa, b_gamma, b_delta};
    p.validate();
    return p;
}

std::string ScenarioConfig::serialize() const {
    std::ostringstream os;
    os << "[run]\n";
    os << "units = " << (units == UnitMode::physical ? "physical" : "dimensionless") << "\n";
    os << "t_start_units = " << CsvWriter::format(t_start_units) << "\n";
    os << "wait_units = " << CsvWriter::format(wait_units) << "\n";
    os << "\n[cavity_a]\n";
    os << "g = " << CsvWriter::format(a_g) << "\n";
    os << "kappa = " << CsvWriter::format(a_kappa) << "\n";
    os << "gamma = " << CsvWriter::format(a_gamma) << "\n";
    os << "delta = " << CsvWriter::format(a_delta) << "\n";
    os << "\n[cavity_b]\n";
    os << "g = " << CsvWriter::format(b_g) << "\n";
    os << "kappa = " << CsvWriter::format(b_kappa) << "\n";
    os << "gamma = " << CsvWriter::format(b_gamma) << "\n";
    os << "delta = " << CsvWriter::format(b_delta) << "\n";
    os << "\n[grid]\n";
    os << "points = " << grid_points << "\n";
    os << "width_mult = " << CsvWriter::format(grid_width_mult) << "\n";
    return os.str();
}

ScenarioConfig ScenarioConfig::parse(const std::string& text,
                                     const std::string& name) {
    ScenarioConfig cfg;
    std::istringstream in(text);
    std::string line, section;
    int line_no = 0;

    auto where = [&](const std::string& field) {
        return name + ":" + std::to_string(line_no) +
               (field.empty() ? "" : (": field '" + field + "'"));
    };

    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') {
                throw std::invalid_argument(where("") + ": unterminated section header");
            }
            section = trim(line.substr(1, line.size() - 2));
            if (section != "run" && section != "cavity_a" &&
                section != "cavity_b" && section != "grid") {
                throw std::invalid_argument(where("") + ": unknown section [" + section + "]");
            }
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(where("") + ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (section == "run") {
            if (key == "units") {
                if (value == "physical") cfg.units = UnitMode::physical;
                else if (value == "dimensionless") cfg.units = UnitMode::dimensionless;
                else throw std::invalid_argument(where(key) + ": must be 'physical' or 'dimensionless'");
            } else if (key == "t_start_units") cfg.t_start_units = parse_number(where(key), value);
            else if (key == "wait_units") cfg.wait_units = parse_number(where(key), value);
            else throw std::invalid_argument(where(key) + ": unknown key in [run]");
        } else if (section == "cavity_a" || section == "cavity_b") {
            double* slot = nullptr;
            const bool is_a = (section == "cavity_a");
            if (key == "g") slot = is_a ? &cfg.a_g : &cfg.b_g;
            else if (key == "kappa") slot = is_a ? &cfg.a_kappa : &cfg.b_kappa;
            else if (key == "gamma") slot = is_a ? &cfg.a_gamma : &cfg.b_gamma;
            else if (key == "delta") slot = is_a ? &cfg.a_delta : &cfg.b_delta;
            else throw std::invalid_argument(where(key) + ": unknown key in [" + section + "]");
            *slot = parse_number(where(key), value);
        } else if (section == "grid") {
            if (key == "points") {
                const double v = parse_number(where(key), value);
                if (v < 3 || v != std::floor(v)) {
                    throw std::invalid_argument(where(key) + ": must be an odd integer >= 3");
                }
                cfg.grid_points = static_cast<std::size_t>(v);
            } else if (key == "width_mult") {
                cfg.grid_width_mult = parse_number(where(key), value);
            } else {
                throw std::invalid_argument(where(key) + ": unknown key in [grid]");
            }
        } else {
            throw std::invalid_argument(where(key) + ": key outside any section");
        }
    }
    return cfg;
}

ScenarioConfig ScenarioConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

FigureId parse_figure_id(const std::string& id) {
    if (id == "fig2") return FigureId::fig2;
    if (id == "fig3") return FigureId::fig3;
    if (id == "fig4") return FigureId::fig4;
    if (id == "fig5") return FigureId::fig5;
    if (id == "fig6") return FigureId::fig6;
    if (id == "rb87") return FigureId::rb87;
    if (id == "audit") return FigureId::audit;
    throw std::invalid_argument("unknown figure id: " + id);
}

std::string figure_id_name(FigureId id) {
    switch (id) {
        case FigureId::fig2: return "fig2";
        case FigureId::fig3: return "fig3";
        case FigureId::fig4: return "fig4";
        case FigureId::fig5: return "fig5";
        case FigureId::fig6: return "fig6";
        case FigureId::rb87: return "rb87";
        case FigureId::audit: return "audit";
    }
    return "unknown";
}

std::string run_figure(FigureId id, const RunOptions& opts,
                       const ScenarioConfig& config) {
    switch (id) {
        case FigureId::fig2:
        case FigureId::fig3:
            return write_emitter_sweep(id, opts);
        case FigureId::fig4:
            return write_fig4(opts, config);
        case FigureId::fig5:
        case FigureId::fig6:
            return write_gamma_sweep(id, opts, config);
        case FigureId::rb87: {
            run_rb87(opts, config);
            return (std::filesystem::path(opts.out_dir) / "rb87.csv").string();
        }
        case FigureId::audit: {
            const auto path = prepare_out(opts.out_dir, "audit.csv");
            run_audit(1, 100, path.string());
            return path.string();
        }
    }
    throw std::invalid_argument("run_figure: bad id");
}

Rb87Summary run_rb87(const RunOptions& opts, const ScenarioConfig& config) {
    Rb87Summary s;
    s.a = config.cavity_a();
    s.b = config.cavity_b();
    s.p_cav = emission_probability(s.a);

    const double half_kappa_b = 0.5 * s.b.kappa;
    const double t_start = config.t_start_units / half_kappa_b;
    const double t_wait = config.wait_units / half_kappa_b;
    const double t_eval = t_start + t_wait;
    s.t_start_us = t_start;
    s.dt_wait_us = t_wait;

    const auto grid = grid_for(s.a, config, opts);
    const auto spectral = spectral_amplitude(s.a, grid);
    const PacketScatterModel model(spectral, s.b, kInvSqrt2, kInvSqrt2);
    s.herald = model.herald_at(t_eval, s.p_cav);

    // Time-domain windowed-click mixture, as an independent convention.
    const auto td =
        time_domain_scatter(s.a, s.b, 2.0 * t_eval, t_start, t_eval, 40000);
    s.win_p = td.win_unswapped + td.win_reflect + td.win_swap;
    const double win_singlet =
        0.5 * (td.win_reflect + td.win_swap - 2.0 * std::real(td.win_overlap_23));
    s.win_fidelity = s.win_p > 0 ? win_singlet / s.win_p : 0.0;

    // Headline convention: swap-channel emission probability and the
    // amplitude overlap of the R-polarised click sector (see README).
    s.headline_p = s.herald.p_emit_b;
    s.headline_fidelity = s.herald.fidelity_r_amp;
    s.headline_p_overall = s.p_cav * s.headline_p;

    if (!opts.out_dir.empty()) {
        const auto path = prepare_out(opts.out_dir, "rb87.csv");
        CsvWriter csv(path.string());
        common_meta(csv, s.a, s.b, &grid, opts);
        csv.meta("units", "angular rad/us internally; rates entered as /2pi MHz");
        csv.header({"t_start_us", "dt_wait_us", "p_cav", "p_outside",
                    "fidelity", "fidelity_r", "fidelity_r_amp", "p_emit_b",
                    "p_overall_headline", "win_p", "win_fidelity"});
        csv.row({s.t_start_us, s.dt_wait_us, s.p_cav, s.herald.p,
                 s.herald.fidelity, s.herald.fidelity_r,
                 s.herald.fidelity_r_amp, s.herald.p_emit_b,
                 s.headline_p_overall, s.win_p, s.win_fidelity});
    }
    return s;
}

int run_audit(std::uint64_t seed, int n_draws, const std::string& csv_path) {
    const auto rows = run_audit_rows(seed, n_draws);

    CsvWriter csv(csv_path);
    csv.meta("code_version", kVersion);
    csv.meta("seed", static_cast<double>(seed));
    csv.meta("n_draws", static_cast<double>(n_draws));
    csv.header({"quantity", "closed_form", "oracle", "abs_err", "rel_err",
                "tolerance", "pass"});
    int failed = 0;
    for (const auto& r : rows) {
        if (!r.pass) ++failed;
        csv.text_row({r.quantity, format_complex(r.closed_form),
                      format_complex(r.oracle), CsvWriter::format(r.abs_err),
                      CsvWriter::format(r.rel_err),
                      CsvWriter::format(r.tolerance), r.pass ? "1" : "0"});
    }
    return failed;
}

}  // namespace cqed
