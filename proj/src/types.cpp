#include "cqed/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace cqed {

bool CavityParams::real_mu_regime() const {
    return delta == 0.0 && g < (kappa - gamma) / (4.0 * std::sqrt(2.0));
}

void CavityParams::validate() const {
    if (!std::isfinite(g) || !std::isfinite(kappa) || !std::isfinite(gamma) ||
        !std::isfinite(delta) || !std::isfinite(omega_c)) {
        throw std::invalid_argument("CavityParams: all rates must be finite");
    }
    if (kappa <= 0.0) {
        throw std::invalid_argument("CavityParams: kappa must be > 0");
    }
    if (g < 0.0 || gamma < 0.0) {
        throw std::invalid_argument("CavityParams: g and gamma must be >= 0");
    }
}

FrequencyGrid make_grid(double half_width, std::size_t n_points) {
    if (!(half_width > 0.0) || !std::isfinite(half_width)) {
        throw std::invalid_argument("make_grid: half_width must be positive");
    }
    if (n_points < 3 || n_points % 2 == 0) {
        throw std::invalid_argument(
            "make_grid: n_points must be odd and >= 3, got " +
            std::to_string(n_points));
    }

    FrequencyGrid grid;
    grid.half_width = half_width;
    grid.delta_omega.resize(n_points);
    grid.weights.resize(n_points);

    const double h = 2.0 * half_width / static_cast<double>(n_points - 1);
    const std::size_t mid = (n_points - 1) / 2;
    for (std::size_t k = 0; k <= mid; ++k) {
        const double x = h * static_cast<double>(k);
        grid.delta_omega[mid + k] = x;
        grid.delta_omega[mid - k] = -x;  // symmetric to the bit
    }
    for (std::size_t i = 0; i < n_points; ++i) {
        const bool edge = (i == 0 || i + 1 == n_points);
        grid.weights[i] = edge ? h / 3.0 : (i % 2 == 1 ? 4.0 * h / 3.0 : 2.0 * h / 3.0);
    }
    return grid;
}

SpectralFunction make_spectral(FrequencyGrid grid, std::vector<cplx> values) {
    if (grid.size() != values.size()) {
        throw std::invalid_argument("make_spectral: grid/value size mismatch");
    }
    SpectralFunction s;
    s.grid = std::move(grid);
    s.values = std::move(values);
    s.l2_norm = integrate_grid(s.grid, [&s](std::size_t i) {
        return std::norm(s.values[i]);
    });
    return s;
}

CavityParams to_angular(double g_mhz, double kappa_mhz, double gamma_mhz,
                        double delta_mhz, const PhysicalUnits& units) {
    if (units.mode != UnitMode::physical) {
        throw std::invalid_argument("to_angular: requires physical unit mode");
    }
    CavityParams p{two_pi * g_mhz, two_pi * kappa_mhz, two_pi * gamma_mhz,
                   two_pi * delta_mhz, 0.0};
    p.validate();
    return p;
}

}  // namespace cqed
