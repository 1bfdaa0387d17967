#include "cqed/expcalc.hpp"

#include <cmath>

namespace cqed {

namespace {
// Crossover below which sinh(x)/x style expressions switch to their series.
constexpr double kSmall = 1e-4;
}

cplx unit_moment(int k, cplx x) {
    if (std::abs(x) < 0.5) {
        // sum_m x^m / (m! (k + m + 1))
        cplx term = 1.0 / static_cast<double>(k + 1);
        cplx sum = term;
        cplx xp = 1.0;
        for (int m = 1; m < 40; ++m) {
            xp *= x / static_cast<double>(m);
            const cplx add = xp / static_cast<double>(k + m + 1);
            sum += add;
            if (std::abs(add) < 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    const cplx ex = std::exp(x);
    cplx m = (ex - 1.0) / x;
    for (int j = 1; j <= k; ++j) m = (ex - static_cast<double>(j) * m) / x;
    return m;
}

cplx exp_sinhc(cplx lam, cplx eta, double t) {
    const cplx et = eta * t;
    if (std::abs(et) < kSmall) {
        const cplx et2 = et * et;
        return std::exp(lam * t) * t * (1.0 + et2 / 6.0 + et2 * et2 / 120.0);
    }
    return (std::exp((lam + eta) * t) - std::exp((lam - eta) * t)) / (2.0 * eta);
}

cplx exp_cosh(cplx lam, cplx eta, double t) {
    return 0.5 * (std::exp((lam + eta) * t) + std::exp((lam - eta) * t));
}

cplx int_exp_sinhc(cplx lam, cplx eta, double t) {
    const cplx et = eta * t;
    if (std::abs(et) < kSmall) {
        const cplx lt = lam * t;
        const cplx et2 = et * et;
        const double t2 = t * t;
        return t2 * (unit_moment(1, lt) + et2 * unit_moment(3, lt) / 6.0 +
                     et2 * et2 * unit_moment(5, lt) / 120.0);
    }
    const cplx ip = int_exp(lam + eta, t);
    const cplx im = int_exp(lam - eta, t);
    return (ip - im) / (2.0 * eta);
}

cplx int_exp_cosh(cplx lam, cplx eta, double t) {
    return 0.5 * (int_exp(lam + eta, t) + int_exp(lam - eta, t));
}

}  // namespace cqed
