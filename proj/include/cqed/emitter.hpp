#ifndef CQED_EMITTER_HPP
#define CQED_EMITTER_HPP

#include "cqed/types.hpp"

namespace cqed {

// Derived complex constants of the emitter closed forms:
//   mu^2 = ((i delta + kappa/2 - gamma/2)/2)^2 - 2 g^2
//   nu   = -(i delta + kappa/2 + gamma/2)/2
// The principal square-root branch is used for mu; every emitter output is
// even in mu, which the test suite asserts rather than assumes.
struct EmitterRoots {
    cplx mu;
    cplx nu;
};

EmitterRoots emitter_roots(const CavityParams& p);

// Amplitudes of |e>, |g_L>|L> and |g_R>|R> at time t for the atom initially
// excited with the cavity empty. s_1 == s_2 identically.
struct EmitterAmplitudes {
    cplx s_e;
    cplx s_1;
    cplx s_2;
    double t;
};

EmitterAmplitudes emitter_amplitudes(const CavityParams& p, double t);
// Root-injecting overload, used by the branch-independence tests.
EmitterAmplitudes emitter_amplitudes(const CavityParams& p,
                                     const EmitterRoots& roots, double t);

// Unnormalised spectral amplitude: the Fourier transform of s_1 over t >= 0,
// evaluated as -i g / ((i delta_omega + nu)^2 - mu^2).
cplx spectral_amplitude_at(const CavityParams& p, double delta_omega);

// Emission spectrum T(delta_omega) of either circular polarisation.
// Requires a decaying solution (Re(nu +/- mu) < 0).
double emission_spectrum(const CavityParams& p, double delta_omega);

// Probability that the excitation leaves through the cavity output channel,
// kappa g^2 / (2 nu (mu^2 - nu^2)). The closed form is real only on its
// validity domain (delta = 0); a significant imaginary residue raises an
// internal-consistency error.
double emission_probability(const CavityParams& p);

// kappa * 2 * integral |s_1|^2 dt, exact in the roots; valid for any delta.
// Serves as the flux route matching emission_probability at delta = 0.
double emission_flux_probability(const CavityParams& p);

// Full width at half maximum of T, closed form
// 2 sqrt(-(nu^2 + mu^2) + sqrt(2 (nu^4 + mu^4))), real-mu regime only.
double fwhm(const CavityParams& p);

// Bisection on T(delta) - T(0)/2; works in any decaying regime.
double fwhm_numeric(const CavityParams& p);

// Unit-L2-norm spectral amplitude sampled on the grid. Normalisation is done
// on the grid quadrature so downstream weighted sums of |s|^2 are exactly 1.
// Throws when more than 1e-3 of the analytic spectral mass falls outside the
// grid window.
SpectralFunction spectral_amplitude(const CavityParams& p,
                                    const FrequencyGrid& grid);

// Default quadrature window for packets emitted by p: 40 FWHM half-width,
// 4001 Simpson points. The window keeps the truncated tail mass well under
// the 1e-3 gate and the point count passes the grid-doubling stability test.
FrequencyGrid default_grid(const CavityParams& p, std::size_t n_points = 4001,
                           double width_mult = 40.0);

}  // namespace cqed

#endif
