#ifndef CQED_TYPES_HPP
#define CQED_TYPES_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace cqed {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double two_pi = 2.0 * pi;

// Rates of one single-sided cavity holding one three-level atom.
// All rates are angular frequencies in a common (arbitrary) unit;
// time is measured in the inverse of that unit.
struct CavityParams {
    double g;          // atom-cavity coupling
    double kappa;      // cavity field decay rate
    double gamma;      // atomic free-space decay rate
    double delta = 0;  // atom-cavity detuning, omega_c - omega_e
    double omega_c = 0;  // cavity resonance; kept at 0 in the rotating frame

    // True when the emitter-side root mu comes out real:
    // g < (kappa - gamma) / (4 sqrt(2)), with delta = 0.
    bool real_mu_regime() const;

    // Throws std::invalid_argument on non-finite or non-physical rates.
    void validate() const;
};

// Symmetric frequency-offset grid delta_omega = omega - omega_c with
// composite-Simpson quadrature weights. Weights sum to 2 * half_width.
struct FrequencyGrid {
    std::vector<double> delta_omega;
    std::vector<double> weights;
    double half_width = 0;

    std::size_t size() const { return delta_omega.size(); }
};

// n_points must be odd and >= 3 (Simpson panels), half_width > 0.
FrequencyGrid make_grid(double half_width, std::size_t n_points);

// Fixed-order weighted sum; keeps reductions bit-stable across runs.
template <class F>
auto integrate_grid(const FrequencyGrid& grid, F&& f) {
    auto acc = decltype(f(std::size_t{0})){};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        acc += grid.weights[i] * f(i);
    }
    return acc;
}

// Complex amplitude sampled on a FrequencyGrid. l2_norm caches the
// quadrature value of the integral of |values|^2 over delta_omega.
struct SpectralFunction {
    FrequencyGrid grid;
    std::vector<cplx> values;
    double l2_norm = 0;

    bool normalized() const { return std::abs(l2_norm - 1.0) < 1e-6; }
};

// Builds a SpectralFunction and caches its l2_norm.
SpectralFunction make_spectral(FrequencyGrid grid, std::vector<cplx> values);

enum class UnitMode { dimensionless, physical };

// In physical mode every rate quoted as "r/2pi in MHz" is converted to an
// angular frequency in rad/us; times then come out in us.
struct PhysicalUnits {
    UnitMode mode = UnitMode::dimensionless;
};

CavityParams to_angular(double g_mhz, double kappa_mhz, double gamma_mhz,
                        double delta_mhz, const PhysicalUnits& units);

}  // namespace cqed

#endif
