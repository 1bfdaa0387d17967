#include "cqed/ode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cqed {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// 4th-order embedded weights (b7 = 1/40 applies to the FSAL stage).
constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640,
                 e5 = -92097.0 / 339200, e6 = 187.0 / 2100, e7 = 1.0 / 40;

}  // namespace

OdeSolution integrate_ode(const OdeRhs& rhs, std::vector<cplx> y0, double t0,
                          const std::vector<double>& sample_times,
                          OdeTolerances tol) {
    if (tol.rel < 1e-14 || tol.abs < 1e-16) {
        throw std::invalid_argument("integrate_ode: tolerance too tight");
    }
    if (sample_times.empty()) {
        throw std::invalid_argument("integrate_ode: no sample times");
    }
    for (std::size_t i = 0; i < sample_times.size(); ++i) {
        const double prev = (i == 0) ? t0 : sample_times[i - 1];
        if (sample_times[i] < prev) {
            throw std::invalid_argument("integrate_ode: sample times must increase");
        }
    }

    const std::size_t n = y0.size();
    OdeSolution sol;
    sol.tolerances = tol;
    sol.times = sample_times;
    sol.states.reserve(sample_times.size());

    std::vector<cplx> y = std::move(y0);
    std::vector<cplx> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n);
    std::vector<cplx> ytmp(n), y5(n);

    double t = t0;
    rhs(t, y, k1);

    const double t_end = sample_times.back();
    double h = std::max((t_end - t0) * 1e-3, 1e-8);
    std::size_t next_sample = 0;

    // Emit any samples that coincide with t0.
    while (next_sample < sample_times.size() && sample_times[next_sample] <= t) {
        sol.states.push_back(y);
        ++next_sample;
    }

    while (next_sample < sample_times.size()) {
        const double target = sample_times[next_sample];
        if (t + h > target) h = target - t;
        if (h < 1e-15 * std::max(1.0, std::abs(t))) {
            throw std::runtime_error("integrate_ode: step-size underflow");
        }

        auto stage = [&](std::vector<cplx>& k, double c,
                         std::initializer_list<std::pair<double, const std::vector<cplx>*>> terms) {
            for (std::size_t i = 0; i < n; ++i) {
                cplx acc = y[i];
                for (const auto& [a, kv] : terms) acc += h * a * (*kv)[i];
                ytmp[i] = acc;
            }
            rhs(t + c * h, ytmp, k);
        };

        stage(k2, c2, {{a21, &k1}});
        stage(k3, c3, {{a31, &k1}, {a32, &k2}});
        stage(k4, c4, {{a41, &k1}, {a42, &k2}, {a43, &k3}});
        stage(k5, c5, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}});
        stage(k6, 1.0, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}});

        for (std::size_t i = 0; i < n; ++i) {
            y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                                b5 * k5[i] + b6 * k6[i]);
        }
        rhs(t + h, y5, k7);  // FSAL

        double err_sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const cplx y4 = y[i] + h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                                        e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double scale =
                tol.abs + tol.rel * std::max(std::abs(y[i]), std::abs(y5[i]));
            const double e = std::abs(y5[i] - y4) / scale;
            err_sq += e * e;
        }
        const double err = std::sqrt(err_sq / static_cast<double>(n));

        if (err <= 1.0) {
            t += h;
            y.swap(y5);
            k1.swap(k7);
            ++sol.steps_accepted;
            while (next_sample < sample_times.size() &&
                   t >= sample_times[next_sample] - 1e-14 * std::max(1.0, std::abs(t))) {
                sol.states.push_back(y);
                ++next_sample;
            }
        } else {
            ++sol.steps_rejected;
        }

        const double factor =
            std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0);
        h *= factor;
    }

    return sol;
}

}  // namespace cqed
