#include "cqed/scatterer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cqed/expcalc.hpp"

namespace cqed {

namespace {
const cplx I{0.0, 1.0};
}

ScatterRoots scatter_roots(const CavityParams& p, double delta_omega) {
    p.validate();
    ScatterRoots r;
    r.delta_omega = delta_omega;
    r.lambda = -(-I * p.delta - 2.0 * I * delta_omega + 0.5 * p.kappa +
                 0.5 * p.gamma) *
               0.5;
    const cplx b = (-I * p.delta - 0.5 * p.kappa + 0.5 * p.gamma) * 0.5;
    r.eta = std::sqrt(b * b - 2.0 * p.g * p.g);
    r.rho = (I * delta_omega - 0.5 * p.kappa) * 0.5;
    return r;
}

ScatterResponse::ScatterResponse(const CavityParams& p, double delta_omega)
    : ScatterResponse(p, scatter_roots(p, delta_omega)) {}

ScatterResponse::ScatterResponse(const CavityParams& p,
                                 const ScatterRoots& roots)
    : roots_(roots), g_(p.g), kappa_(p.kappa) {}

IntracavityAmplitudes ScatterResponse::intracavity(double t, cplx alpha,
                                                   cplx beta) const {
    if (t < 0.0) {
        throw std::domain_error("intracavity_amplitudes: t must be >= 0");
    }
    const auto& [lam, eta, rho, dw] = roots_;
    const cplx sc = exp_sinhc(lam, eta, t);       // e^{lam t} sinh(eta t)/eta
    const cplx ch = exp_cosh(lam, eta, t);        // e^{lam t} cosh(eta t)
    const cplx er = std::exp(2.0 * rho * t);
    const cplx even = 0.5 * (2.0 * rho - lam) * sc + 0.5 * ch;

    IntracavityAmplitudes a;
    a.t = t;
    a.delta_omega = dw;
    a.alpha = alpha;
    a.beta = beta;
    a.c_e = -I * alpha * g_ * sc;
    a.c_1 = alpha * (even + 0.5 * er);
    a.c_2 = beta * er;
    a.c_3 = 0.0;
    a.c_4 = alpha * (even - 0.5 * er);
    return a;
}

std::array<cplx, 5> ScatterResponse::output_integrals(double t, cplx alpha,
                                                      cplx beta) const {
    if (t < 0.0) {
        throw std::domain_error("output_time_integrals: t must be >= 0");
    }
    const auto& [lam, eta, rho, dw] = roots_;
    const double sk = std::sqrt(kappa_);
    const cplx isc = int_exp_sinhc(lam, eta, t);
    const cplx ich = int_exp_cosh(lam, eta, t);
    const cplx ier = int_exp(2.0 * rho, t);
    const cplx even = 0.5 * (2.0 * rho - lam) * isc + 0.5 * ich;

    std::array<cplx, 5> c;
    c[0] = -sk * (-I * alpha * g_ * isc);
    c[1] = -sk * alpha * (even + 0.5 * ier);
    c[2] = -sk * beta * ier;
    c[3] = 0.0;
    c[4] = -sk * alpha * (even - 0.5 * ier);
    return c;
}

ScatteredChannelAmplitudes ScatterResponse::channel(double t, cplx alpha,
                                                    cplx beta) const {
    const auto c = output_integrals(t, alpha, beta);
    const double sk = std::sqrt(kappa_);

    ScatteredChannelAmplitudes s;
    s.t = t;
    s.delta_omega = roots_.delta_omega;
    s.cav_e = c[0];
    s.cav_1 = c[1];
    s.cav_2 = c[2];
    s.cav_3 = c[3];
    s.cav_4 = c[4];
    s.out_1 = sk * c[1] + alpha;
    s.out_2 = sk * c[2] + beta;
    s.out_3 = sk * c[3];
    s.out_4 = sk * c[4];
    return s;
}

ScatteredChannelAmplitudes ScatterResponse::channel_steady(cplx alpha,
                                                           cplx beta) const {
    // Resolvent form of the infinite-time integrals: with the coupled trio
    // generator M acting on (c_e, c_1, c_4), int_0^inf c dt = -M^{-1} c(0).
    // A and B are the diagonal entries of M; B != 0 because kappa > 0.
    const double sk = std::sqrt(kappa_);
    const cplx B = 2.0 * roots_.rho;
    const cplx A = 2.0 * (roots_.lambda - roots_.rho);  // i(delta+dw) - gamma/2
    const cplx g = g_;

    cplx int_e, int_1, int_4;
    if (g_ == 0.0) {
        int_e = 0.0;
        int_1 = -alpha / B;
        int_4 = 0.0;
    } else {
        const cplx den = A * B + 2.0 * g * g;
        int_e = -I * g * alpha / den;
        int_1 = -alpha * (A * B + g * g) / (B * den);
        int_4 = g * g * alpha / (B * den);
    }
    const cplx int_2 = -beta / B;

    ScatteredChannelAmplitudes s;
    s.t = std::numeric_limits<double>::infinity();
    s.delta_omega = roots_.delta_omega;
    s.cav_e = -sk * int_e;
    s.cav_1 = -sk * int_1;
    s.cav_2 = -sk * int_2;
    s.cav_3 = 0.0;
    s.cav_4 = -sk * int_4;
    s.out_1 = sk * s.cav_1 + alpha;
    s.out_2 = sk * s.cav_2 + beta;
    s.out_3 = 0.0;
    s.out_4 = sk * s.cav_4;
    return s;
}

IntracavityAmplitudes intracavity_amplitudes(const CavityParams& p,
                                             double delta_omega, double t,
                                             cplx alpha, cplx beta) {
    return ScatterResponse(p, delta_omega).intracavity(t, alpha, beta);
}

std::array<cplx, 5> output_time_integrals(const CavityParams& p,
                                          double delta_omega, double t,
                                          cplx alpha, cplx beta) {
    return ScatterResponse(p, delta_omega).output_integrals(t, alpha, beta);
}

ScatteredChannelAmplitudes scatter_channel(const CavityParams& p,
                                           double delta_omega, double t,
                                           cplx alpha, cplx beta) {
    return ScatterResponse(p, delta_omega).channel(t, alpha, beta);
}

ScatteredChannelAmplitudes scatter_channel_steady(const CavityParams& p,
                                                  double delta_omega,
                                                  cplx alpha, cplx beta) {
    return ScatterResponse(p, delta_omega).channel_steady(alpha, beta);
}

}  // namespace cqed
