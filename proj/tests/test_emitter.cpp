#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cqed/emitter.hpp"
#include "cqed/oracle.hpp"

using namespace cqed;

namespace {

CavityParams fig2_params() {
    CavityParams p;
    p.kappa = 5.0;
    p.gamma = 0.05;
    p.g = (p.kappa - p.gamma) / (8.0 * std::sqrt(2.0));
    return p;
}

double cdist(cplx a, cplx b) { return std::abs(a - b); }

}  // namespace

TEST_CASE("roots: algebraic collapse at g = 0, kappa = 4") {
    CavityParams p{0.0, 4.0, 0.0, 0.0};
    const auto r = emitter_roots(p);
    CHECK(cdist(r.nu, {-1.0, 0.0}) < 1e-15);
    CHECK(cdist(r.mu, {1.0, 0.0}) < 1e-15);
}

TEST_CASE("roots: real mu at half the bound, defining identities hold") {
    const auto p = fig2_params();
    const auto r = emitter_roots(p);
    CHECK(std::abs(std::imag(r.mu)) < 1e-15);
    CHECK(std::real(r.mu) > 0.0);

    const cplx a = (cplx{0.0, p.delta} + 0.5 * p.kappa - 0.5 * p.gamma) * 0.5;
    CHECK(cdist(r.mu * r.mu, a * a - 2.0 * p.g * p.g) < 1e-12);
    CHECK(cdist(r.nu, -(cplx{0.0, p.delta} + 0.5 * p.kappa + 0.5 * p.gamma) * 0.5) <
          1e-12);

    // decaying solution
    CHECK(std::real(r.nu + r.mu) < 0.0);
    CHECK(std::real(r.nu - r.mu) < 0.0);
}

TEST_CASE("roots: complex mu with detuning, identities still hold") {
    CavityParams p{0.4, 5.0, 0.05, 0.7};
    const auto r = emitter_roots(p);
    CHECK(std::abs(std::imag(r.mu)) > 1e-3);
    const cplx a = (cplx{0.0, p.delta} + 0.5 * p.kappa - 0.5 * p.gamma) * 0.5;
    CHECK(cdist(r.mu * r.mu, a * a - 2.0 * p.g * p.g) < 1e-12);
}

TEST_CASE("amplitudes: initial conditions and s_1 == s_2") {
    const auto p = fig2_params();
    const auto a0 = emitter_amplitudes(p, 0.0);
    CHECK(cdist(a0.s_e, 1.0) < 1e-15);
    CHECK(std::abs(a0.s_1) < 1e-15);

    for (double t : {0.1, 0.7, 2.3, 9.0}) {
        const auto a = emitter_amplitudes(p, t);
        CHECK(a.s_1 == a.s_2);
        const double norm =
            std::norm(a.s_e) + std::norm(a.s_1) + std::norm(a.s_2);
        CHECK(norm <= 1.0 + 1e-12);
    }
    CHECK_THROWS_AS(emitter_amplitudes(p, -0.1), std::domain_error);
}

TEST_CASE("amplitudes match the effective-Hamiltonian integration") {
    // module oracle: adaptive RK on i d/dt psi = H_eff psi
    for (const auto& p :
         {fig2_params(), CavityParams{0.4, 5.0, 0.05, 0.7},
          CavityParams{1.9, 5.0, 0.05, 0.0}, CavityParams{0.3, 2.0, 0.9, -0.6}}) {
        const double t = 1.0;
        const auto closed = emitter_amplitudes(p, t);
        const auto ode = integrate_emitter_effective(p, {t}, {1e-11, 1e-13});
        const auto& y = ode.final_state();
        CHECK(cdist(closed.s_e, y[0]) < 1e-8);
        CHECK(cdist(closed.s_1, y[1]) < 1e-8);
        CHECK(cdist(closed.s_2, y[2]) < 1e-8);
    }
}

TEST_CASE("norm decay rate matches the loss channels") {
    // d/dt(|s_e|^2 + |s_1|^2 + |s_2|^2) = -gamma |s_e|^2 - kappa (|s_1|^2+|s_2|^2)
    const auto p = fig2_params();
    const double h = 1e-4;
    for (double t : {0.05, 0.3, 1.1, 4.0}) {
        auto nrm = [&](double tt) {
            const auto a = emitter_amplitudes(p, tt);
            return std::norm(a.s_e) + std::norm(a.s_1) + std::norm(a.s_2);
        };
        const auto a = emitter_amplitudes(p, t);
        const double lhs = (nrm(t + h) - nrm(t - h)) / (2.0 * h);
        const double rhs = -p.gamma * std::norm(a.s_e) -
                           p.kappa * (std::norm(a.s_1) + std::norm(a.s_2));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));
    }
}

TEST_CASE("branch independence: negating mu changes nothing") {
    for (const auto& p :
         {fig2_params(), CavityParams{0.4, 5.0, 0.05, 0.7},
          CavityParams{1.9, 5.0, 0.05, 0.0}}) {
        auto r = emitter_roots(p);
        auto flipped = r;
        flipped.mu = -flipped.mu;
        for (double t : {0.2, 1.0, 3.7}) {
            const auto a = emitter_amplitudes(p, r, t);
            const auto b = emitter_amplitudes(p, flipped, t);
            CHECK(cdist(a.s_e, b.s_e) < 1e-12);
            CHECK(cdist(a.s_1, b.s_1) < 1e-12);
        }
    }
}

TEST_CASE("emission probability: closed form, flux route, loss bookkeeping") {
    SUBCASE("gamma = 0 gives exactly 1") {
        CavityParams p{0.44, 5.0, 0.0, 0.0};
        CHECK(emission_probability(p) == doctest::Approx(1.0).epsilon(1e-10));
    }

    SUBCASE("closed form equals the time-domain flux") {
        for (double g : {0.2, 0.44, 0.8, 1.6}) {
            for (double gam : {0.02, 0.4, 1.1}) {
                CavityParams p{g, 5.0, gam, 0.0};
                CHECK(emission_probability(p) ==
                      doctest::Approx(emission_flux_probability(p)).epsilon(1e-10));
            }
        }
    }

    SUBCASE("monotone increasing in g (fixed kappa, gamma)") {
        double prev = 0.0;
        for (double g = 0.05; g < 0.86; g += 0.05) {
            CavityParams p{g, 5.0, 0.05, 0.0};
            const double pc = emission_probability(p);
            CHECK(pc > prev);
            prev = pc;
        }
    }

    SUBCASE("p_cav + gamma int |s_e|^2 dt = 1") {
        const auto p = fig2_params();
        // adaptive-free: fine fixed Simpson over a long window
        const std::size_t n = 200001;
        const double t_end = 60.0;
        const double h = t_end / static_cast<double>(n - 1);
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double w =
                (i == 0 || i + 1 == n) ? h / 3.0 : (i % 2 ? 4.0 * h / 3.0 : 2.0 * h / 3.0);
            acc += w * std::norm(emitter_amplitudes(p, h * double(i)).s_e);
        }
        CHECK(emission_probability(p) + p.gamma * acc ==
              doctest::Approx(1.0).epsilon(1e-8));
    }

    SUBCASE("imaginary residue guard fires off the validity domain") {
        CavityParams p{0.4, 5.0, 0.05, 0.7};
        CHECK_THROWS_AS(emission_probability(p), std::runtime_error);
        // the flux route stays valid at delta != 0
        const double flux = emission_flux_probability(p);
        CHECK(flux > 0.0);
        CHECK(flux < 1.0);
    }
}

TEST_CASE("spectrum: symmetry, normalisation, brute-force double integral") {
    const auto p = fig2_params();

    SUBCASE("even in delta_omega at delta = 0") {
        for (double d : {0.1, 0.33, 1.4}) {
            CHECK(emission_spectrum(p, d) ==
                  doctest::Approx(emission_spectrum(p, -d)).epsilon(1e-13));
        }
    }

    SUBCASE("2 int T domega = p_cav on the default grid") {
        const auto grid = default_grid(p);
        const double integral = integrate_grid(grid, [&](std::size_t i) {
            return emission_spectrum(p, grid.delta_omega[i]);
        });
        CHECK(2.0 * integral == doctest::Approx(emission_probability(p)).epsilon(1e-4));
    }

    SUBCASE("closed form vs truncated double time integral") {
        // T = (kappa/2pi) |int_0^T e^{i delta t} s_1|^2 with plain Simpson
        const double t_max = 80.0;
        const std::size_t n = 40001;
        const double h = t_max / static_cast<double>(n - 1);
        for (double d : {0.0, 0.2, 0.7}) {
            cplx ft = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double t = h * static_cast<double>(i);
                const double w =
                    (i == 0 || i + 1 == n) ? h / 3.0 : (i % 2 ? 4.0 * h / 3.0 : 2.0 * h / 3.0);
                ft += w * std::exp(cplx{0.0, d * t}) * emitter_amplitudes(p, t).s_1;
            }
            const double brute = p.kappa / two_pi * std::norm(ft);
            CHECK(emission_spectrum(p, d) == doctest::Approx(brute).epsilon(1e-5));
        }
    }

    SUBCASE("non-decaying parameters raise a divergence error") {
        CavityParams p0{0.0, 1.0, 0.0, 0.0};  // uncoupled excited atom
        CHECK_THROWS_AS(emission_spectrum(p0, 0.1), std::domain_error);
    }
}

TEST_CASE("fwhm: closed form against bisection and its regime guard") {
    const auto p = fig2_params();
    CHECK(fwhm(p) == doctest::Approx(fwhm_numeric(p)).epsilon(1e-6));

    SUBCASE("monotone in g across the fig2 sweep") {
        double prev = 0.0;
        for (double g = 0.05; g < 0.86; g += 0.05) {
            CavityParams q{g, 5.0, 0.05, 0.0};
            const double w = fwhm(q);
            CHECK(w > prev);
            prev = w;
        }
    }

    SUBCASE("increasing in gamma along the g1 rule") {
        double prev = 0.0;
        for (double gam = 0.05; gam <= 1.0; gam += 0.05) {
            CavityParams q{(5.0 - gam) / (8.0 * std::sqrt(2.0)), 5.0, gam, 0.0};
            const double w = fwhm(q);
            CHECK(w > prev);
            prev = w;
        }
    }

    SUBCASE("complex-mu regime is rejected, numeric route still works") {
        CavityParams q{1.9, 5.0, 0.05, 0.0};
        CHECK_THROWS_AS(fwhm(q), std::domain_error);
        CHECK(fwhm_numeric(q) > 0.0);
    }
}

TEST_CASE("spectral amplitude: normalisation, peak, half-max cross-check") {
    const auto p = fig2_params();
    const auto grid = default_grid(p);
    const auto s = spectral_amplitude(p, grid);

    CHECK(s.l2_norm == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.normalized());

    // |s| peaks at delta = 0 for delta(detuning) = 0
    std::size_t argmax = 0;
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        if (std::abs(s.values[i]) > std::abs(s.values[argmax])) argmax = i;
    }
    CHECK(s.grid.delta_omega[argmax] == 0.0);

    // |s(d)|^2 / |s(0)|^2 = 1/2 at d = +/- fwhm/2, within grid resolution
    const double width = fwhm(p);
    const double h = s.grid.delta_omega[1] - s.grid.delta_omega[0];
    const auto ratio_at = [&](double d) {
        const std::size_t i = static_cast<std::size_t>(
            std::llround((d + s.grid.half_width) / h));
        return std::norm(s.values[i]) / std::norm(s.values[argmax]);
    };
    CHECK(ratio_at(width / 2.0) == doctest::Approx(0.5).epsilon(4.0 * h / width));
    CHECK(ratio_at(-width / 2.0) == doctest::Approx(0.5).epsilon(4.0 * h / width));

    // T(omega) proportional to |s(omega)|^2
    const double t0 = emission_spectrum(p, 0.0) / std::norm(s.values[argmax]);
    for (double d : {0.1, 0.5, 2.0}) {
        const std::size_t i = static_cast<std::size_t>(
            std::llround((d + s.grid.half_width) / h));
        CHECK(emission_spectrum(p, s.grid.delta_omega[i]) ==
              doctest::Approx(t0 * std::norm(s.values[i])).epsilon(1e-10));
    }

    SUBCASE("narrow grid trips the truncation gate") {
        CHECK_THROWS_AS(spectral_amplitude(p, make_grid(0.5 * width, 101)),
                        std::domain_error);
    }
}
