#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cqed/types.hpp"

using namespace cqed;

TEST_CASE("simpson grid: single panel weights") {
    const auto g = make_grid(1.0, 3);
    REQUIRE(g.size() == 3);
    CHECK(g.delta_omega[0] == doctest::Approx(-1.0));
    CHECK(g.delta_omega[1] == 0.0);
    CHECK(g.delta_omega[2] == doctest::Approx(1.0));
    CHECK(g.weights[0] == doctest::Approx(1.0 / 3.0));
    CHECK(g.weights[1] == doctest::Approx(4.0 / 3.0));
    CHECK(g.weights[2] == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("simpson grid: invariants and preconditions") {
    CHECK_THROWS_AS(make_grid(0.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(1.0, 1), std::invalid_argument);

    const auto g = make_grid(7.5, 81);
    double wsum = 0.0;
    for (double w : g.weights) wsum += w;
    CHECK(wsum == doctest::Approx(2.0 * g.half_width).epsilon(1e-13));

    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        CHECK(g.delta_omega[i] < g.delta_omega[i + 1]);
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(g.delta_omega[i] == -g.delta_omega[g.size() - 1 - i]);
    }
}

TEST_CASE("simpson grid: exact for cubics") {
    const auto g = make_grid(2.0, 41);
    // integral of 1 + x + x^2 + x^3 over [-2, 2] = 4 + 16/3
    const double got = integrate_grid(g, [&](std::size_t i) {
        const double x = g.delta_omega[i];
        return 1.0 + x + x * x + x * x * x;
    });
    CHECK(got == doctest::Approx(4.0 + 16.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("spectral function caches its weighted norm") {
    const auto g = make_grid(3.0, 11);
    std::vector<cplx> v(g.size(), cplx{0.5, -0.5});
    const auto s = make_spectral(g, v);
    // |v|^2 = 0.5 over a width-6 window
    CHECK(s.l2_norm == doctest::Approx(3.0).epsilon(1e-13));
    CHECK_FALSE(s.normalized());

    const double check = integrate_grid(s.grid, [&](std::size_t i) {
        return std::norm(s.values[i]);
    });
    CHECK(s.l2_norm == doctest::Approx(check).epsilon(1e-12));
}

TEST_CASE("physical units convert /2pi MHz rates to angular rad/us") {
    const PhysicalUnits units{UnitMode::physical};
    const auto a = to_angular(1.2, 15.0, 1.5, 0.0, units);
    CHECK(a.g == doctest::Approx(two_pi * 1.2));
    CHECK(a.kappa == doctest::Approx(two_pi * 15.0));
    CHECK(a.gamma == doctest::Approx(two_pi * 1.5));

    const auto b = to_angular(15.0, 6.0, 3.0, 0.0, units);
    CHECK(b.g == doctest::Approx(two_pi * 15.0));

    const auto zero = to_angular(0.0, 1.0, 0.0, 0.0, units);
    CHECK(zero.g == 0.0);
    CHECK(zero.gamma == 0.0);

    CHECK_THROWS_AS(to_angular(1.0, 1.0, 0.0, 0.0, PhysicalUnits{}),
                    std::invalid_argument);
}

TEST_CASE("cavity params validation and the real-mu flag") {
    CavityParams p{1.0, 5.0, 0.05, 0.0};
    CHECK_NOTHROW(p.validate());

    CavityParams bad = p;
    bad.kappa = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = p;
    bad.g = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = p;
    bad.gamma = std::nan("");
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    // boundary: g < (kappa - gamma) / (4 sqrt 2)
    CavityParams r{0.8, 5.0, 0.05, 0.0};
    CHECK(r.real_mu_regime());
    r.g = 0.9;
    CHECK_FALSE(r.real_mu_regime());
    r.g = 0.5;
    r.delta = 0.3;
    CHECK_FALSE(r.real_mu_regime());
}
