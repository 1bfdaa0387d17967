#include "cqed/emitter.hpp"

#include <cmath>
#include <stdexcept>

#include "cqed/expcalc.hpp"

namespace cqed {

namespace {

const cplx I{0.0, 1.0};

cplx half_sum(const CavityParams& p) {
    // (i delta + kappa/2 - gamma/2) / 2; the sinh coefficient in s_e.
    return (I * p.delta + 0.5 * p.kappa - 0.5 * p.gamma) * 0.5;
}

void require_decaying(const EmitterRoots& r) {
    if (std::real(r.nu + r.mu) >= 0.0 || std::real(r.nu - r.mu) >= 0.0) {
        throw std::domain_error(
            "emitter: non-decaying parameters, time integrals diverge");
    }
}

}  // namespace

EmitterRoots emitter_roots(const CavityParams& p) {
    p.validate();
    const cplx a = half_sum(p);
    EmitterRoots r;
    r.mu = std::sqrt(a * a - 2.0 * p.g * p.g);
    r.nu = -(I * p.delta + 0.5 * p.kappa + 0.5 * p.gamma) * 0.5;
    return r;
}

EmitterAmplitudes emitter_amplitudes(const CavityParams& p, double t) {
    return emitter_amplitudes(p, emitter_roots(p), t);
}

EmitterAmplitudes emitter_amplitudes(const CavityParams& p,
                                     const EmitterRoots& roots, double t) {
    if (t < 0.0) {
        throw std::domain_error("emitter_amplitudes: t must be >= 0");
    }
    const cplx a = half_sum(p);
    const cplx sc = exp_sinhc(roots.nu, roots.mu, t);
    const cplx ch = exp_cosh(roots.nu, roots.mu, t);

    EmitterAmplitudes out;
    out.t = t;
    out.s_e = a * sc + ch;
    out.s_1 = -I * p.g * sc;
    out.s_2 = out.s_1;
    return out;
}

cplx spectral_amplitude_at(const CavityParams& p, double delta_omega) {
    const EmitterRoots r = emitter_roots(p);
    const cplx d = I * delta_omega + r.nu;
    return -I * p.g / (d * d - r.mu * r.mu);
}

double emission_spectrum(const CavityParams& p, double delta_omega) {
    require_decaying(emitter_roots(p));
    return p.kappa / two_pi * std::norm(spectral_amplitude_at(p, delta_omega));
}

double emission_probability(const CavityParams& p) {
    const EmitterRoots r = emitter_roots(p);
    require_decaying(r);
    const cplx value =
        p.kappa * p.g * p.g / (2.0 * r.nu * (r.mu * r.mu - r.nu * r.nu));
    if (std::abs(std::imag(value)) > 1e-10 || std::real(value) < -1e-10 ||
        std::real(value) > 1.0 + 1e-10) {
        throw std::runtime_error(
            "emission_probability: closed form left [0, 1]; outside its "
            "validity domain (delta != 0?)");
    }
    return std::real(value);
}

double emission_flux_probability(const CavityParams& p) {
    const EmitterRoots r = emitter_roots(p);
    require_decaying(r);
    // 2 kappa int_0^inf |s_1|^2 dt with s_1 = -i g e^{nu t} sinh(mu t)/mu,
    // expanded over the poles nu +/- mu and their conjugates.
    const cplx pp = r.nu + r.mu, pm = r.nu - r.mu;
    if (std::abs(r.mu) < 1e-9 * (std::abs(r.nu) + 1.0)) {
        // Degenerate double pole: s_1 -> -i g t e^{nu t}.
        const double re = std::real(r.nu);
        return p.kappa * p.g * p.g / (2.0 * re * re * std::abs(re));
    }
    const cplx sum = 1.0 / (std::conj(pp) + pm) + 1.0 / (pp + std::conj(pm)) -
                     1.0 / (pp + std::conj(pp)) - 1.0 / (pm + std::conj(pm));
    const double integral = p.g * p.g / (4.0 * std::norm(r.mu)) * std::real(sum);
    return 2.0 * p.kappa * integral;
}

double fwhm(const CavityParams& p) {
    const EmitterRoots r = emitter_roots(p);
    if (p.delta != 0.0 || !p.real_mu_regime()) {
        throw std::domain_error(
            "fwhm: closed form needs delta = 0 and real mu; "
            "use fwhm_numeric instead");
    }
    const double nu = std::real(r.nu);
    const double mu = std::real(r.mu);
    const double n2 = nu * nu, m2 = mu * mu;
    return 2.0 * std::sqrt(-(n2 + m2) + std::sqrt(2.0 * (n2 * n2 + m2 * m2)));
}

double fwhm_numeric(const CavityParams& p) {
    const double t0 = emission_spectrum(p, 0.0);
    const double half = 0.5 * t0;

    double hi = std::max({p.kappa, p.g, 1.0});
    while (emission_spectrum(p, hi) > half) hi *= 2.0;
    double lo = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (emission_spectrum(p, mid) > half ? lo : hi) = mid;
        if (hi - lo < 1e-14 * hi) break;
    }
    return 2.0 * 0.5 * (lo + hi);
}

SpectralFunction spectral_amplitude(const CavityParams& p,
                                    const FrequencyGrid& grid) {
    require_decaying(emitter_roots(p));

    std::vector<cplx> raw(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        raw[i] = spectral_amplitude_at(p, grid.delta_omega[i]);
    }
    const double grid_mass = integrate_grid(
        grid, [&raw](std::size_t i) { return std::norm(raw[i]); });

    // Total mass by Parseval: int |s_hat|^2 domega = pi * p_flux / kappa.
    const double total_mass = pi * emission_flux_probability(p) / p.kappa;
    if (grid_mass < (1.0 - 1e-3) * total_mass) {
        throw std::domain_error(
            "spectral_amplitude: grid too narrow, more than 1e-3 of the "
            "spectral mass is outside the window");
    }

    const double scale = 1.0 / std::sqrt(grid_mass);
    for (auto& v : raw) v *= scale;
    return make_spectral(grid, std::move(raw));
}

FrequencyGrid default_grid(const CavityParams& p, std::size_t n_points,
                           double width_mult) {
    const double width =
        (p.delta == 0.0 && p.real_mu_regime()) ? fwhm(p) : fwhm_numeric(p);
    return make_grid(width_mult * width, n_points);
}

}  // namespace cqed
