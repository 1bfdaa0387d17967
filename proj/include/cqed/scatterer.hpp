#ifndef CQED_SCATTERER_HPP
#define CQED_SCATTERER_HPP

#include <array>

#include "cqed/types.hpp"

namespace cqed {

// Derived constants of the cavity-B closed forms at one frequency offset:
//   lambda = -(-i delta - 2 i delta_omega + kappa/2 + gamma/2) / 2
//   eta^2  = ((-i delta - kappa/2 + gamma/2) / 2)^2 - 2 g^2
//   rho    = (i delta_omega - kappa/2) / 2
struct ScatterRoots {
    cplx lambda;
    cplx eta;
    cplx rho;
    double delta_omega;
};

ScatterRoots scatter_roots(const CavityParams& p, double delta_omega);

// Amplitudes of the intracavity basis |e>, |g_L L>, |g_L R>, |g_R L>,
// |g_R R> for the initial state |g_L> (alpha|L> + beta|R>). c_3 vanishes
// identically: nothing couples |g_R>|L>.
struct IntracavityAmplitudes {
    cplx c_e, c_1, c_2, c_3, c_4;
    double t;
    double delta_omega;
    cplx alpha, beta;
};

// Outgoing channel amplitudes composed from the driven-cavity integrals and
// the direct mirror reflection, plus the driven intracavity amplitudes kept
// for norm audits.
struct ScatteredChannelAmplitudes {
    cplx out_1, out_2, out_3, out_4;     // |g_L L>, |g_L R>, |g_R L>, |g_R R>
    cplx cav_e, cav_1, cav_2, cav_3, cav_4;  // sqrt(kappa)-scaled C integrals
    double t;
    double delta_omega;
};

// Per-frequency scattering response with the pole data precomputed, so that
// sweeps over t reuse one construction. alpha multiplies the |L> input and
// beta the |R> input.
class ScatterResponse {
  public:
    ScatterResponse(const CavityParams& p, double delta_omega);
    // Root-injecting constructor for the eta-branch independence tests.
    ScatterResponse(const CavityParams& p, const ScatterRoots& roots);

    const ScatterRoots& roots() const { return roots_; }

    IntracavityAmplitudes intracavity(double t, cplx alpha, cplx beta) const;

    // C_{i,omega}(t) = -sqrt(kappa) integral_0^t c_i dt', for i = e,1,2,3,4.
    std::array<cplx, 5> output_integrals(double t, cplx alpha, cplx beta) const;

    ScatteredChannelAmplitudes channel(double t, cplx alpha, cplx beta) const;
    ScatteredChannelAmplitudes channel_steady(cplx alpha, cplx beta) const;

  private:
    ScatterRoots roots_;
    double g_, kappa_;
};

IntracavityAmplitudes intracavity_amplitudes(const CavityParams& p,
                                             double delta_omega, double t,
                                             cplx alpha, cplx beta);

// C_{i,omega}(t) for i = 1..4 plus the excited-state integral in slot 0.
std::array<cplx, 5> output_time_integrals(const CavityParams& p,
                                          double delta_omega, double t,
                                          cplx alpha, cplx beta);

ScatteredChannelAmplitudes scatter_channel(const CavityParams& p,
                                           double delta_omega, double t,
                                           cplx alpha, cplx beta);

// t -> infinity limit in rational closed form.
ScatteredChannelAmplitudes scatter_channel_steady(const CavityParams& p,
                                                  double delta_omega,
                                                  cplx alpha, cplx beta);

}  // namespace cqed

#endif
