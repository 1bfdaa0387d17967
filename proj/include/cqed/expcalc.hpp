#ifndef CQED_EXPCALC_HPP
#define CQED_EXPCALC_HPP

#include "cqed/types.hpp"

namespace cqed {

// Stable building blocks for amplitudes of the form e^{lam t} sinh(eta t)
// and their time integrals. All of them tolerate eta -> 0 and degenerate
// exponents lam +/- eta -> 0 (the integrals go over to the polynomial
// limits, e.g. the integral of e^{0 t} is t).

// integral_0^1 u^k e^{x u} du, k = 0..5; series for small |x|.
cplx unit_moment(int k, cplx x);

// (e^x - 1) / x
inline cplx phi1(cplx x) { return unit_moment(0, x); }

// integral_0^t e^{p s} ds
inline cplx int_exp(cplx p, double t) { return t * phi1(p * t); }

// e^{lam t} sinh(eta t) / eta
cplx exp_sinhc(cplx lam, cplx eta, double t);

// e^{lam t} cosh(eta t)
cplx exp_cosh(cplx lam, cplx eta, double t);

// integral_0^t e^{lam s} sinh(eta s) / eta ds
cplx int_exp_sinhc(cplx lam, cplx eta, double t);

// integral_0^t e^{lam s} cosh(eta s) ds
cplx int_exp_cosh(cplx lam, cplx eta, double t);

// t -> infinity limits; valid when Re(lam +/- eta) < 0.
inline cplx int_exp_sinhc_inf(cplx lam, cplx eta) {
    return 1.0 / (lam * lam - eta * eta);
}
inline cplx int_exp_cosh_inf(cplx lam, cplx eta) {
    return -lam / (lam * lam - eta * eta);
}
inline cplx int_exp_inf(cplx p) { return -1.0 / p; }

}  // namespace cqed

#endif
