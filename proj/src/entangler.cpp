#include "cqed/entangler.hpp"

#include <cmath>
#include <stdexcept>

#include "cqed/emitter.hpp"
#include "cqed/parallel.hpp"

namespace cqed {

PacketScatterModel::PacketScatterModel(SpectralFunction s,
                                       const CavityParams& cavity_b,
                                       cplx alpha, cplx beta)
    : s_(std::move(s)), alpha_(alpha), beta_(beta) {
    cavity_b.validate();
    resp_.reserve(s_.grid.size());
    for (std::size_t i = 0; i < s_.grid.size(); ++i) {
        resp_.emplace_back(cavity_b, s_.grid.delta_omega[i]);
    }
}

TripartiteState PacketScatterModel::state_at(double t) const {
    if (t < 0.0) {
        throw std::domain_error("synthesize: t must be >= 0");
    }
    const std::size_t n = s_.grid.size();
    TripartiteState st;
    st.grid = s_.grid;
    st.t = t;
    st.a1.resize(n);
    st.a2.resize(n);
    st.a3.resize(n);

    parallel_for(n, [&](std::size_t i) {
        const auto out = resp_[i].channel(t, alpha_, beta_);
        const cplx phase =
            std::exp(cplx{0.0, -s_.grid.delta_omega[i] * t});
        const cplx sw = s_.values[i] * phase;
        st.a1[i] = sw * out.out_1;
        st.a2[i] = sw * out.out_2;
        st.a3[i] = sw * out.out_4;
    });
    return st;
}

HeraldResult PacketScatterModel::herald_at(double t, double p_cav) const {
    return herald(state_at(t), p_cav);
}

std::array<cplx, 4> PacketScatterModel::intracavity_at(double t) const {
    // Coherent superposition of the per-frequency driven amplitudes,
    // b_i(t) = (1/sqrt(2 pi)) integral s(omega) C_{i,omega}(t)
    //          e^{-i delta_omega t} domega.
    std::array<cplx, 4> b{};
    const double pref = 1.0 / std::sqrt(two_pi);
    for (std::size_t i = 0; i < s_.grid.size(); ++i) {
        const auto c = resp_[i].output_integrals(t, alpha_, beta_);
        const cplx w = pref * s_.grid.weights[i] * s_.values[i] *
                       std::exp(cplx{0.0, -s_.grid.delta_omega[i] * t});
        b[0] += w * c[0];  // excited
        b[1] += w * c[1];  // g_L, L
        b[2] += w * c[2];  // g_L, R
        b[3] += w * c[4];  // g_R, R
    }
    return b;
}

TripartiteState synthesize(const SpectralFunction& s, const CavityParams& b,
                           double t, cplx alpha, cplx beta) {
    return PacketScatterModel(s, b, alpha, beta).state_at(t);
}

TripartiteState synthesize(const CavityParams& a, const CavityParams& b,
                           double t, const FrequencyGrid& grid, cplx alpha,
                           cplx beta) {
    return synthesize(spectral_amplitude(a, grid), b, t, alpha, beta);
}

HeraldResult herald(const TripartiteState& state, double p_cav) {
    HeraldResult h;
    h.t = state.t;
    h.p_cav = p_cav;
    h.n_unswapped = integrate_grid(
        state.grid, [&](std::size_t i) { return std::norm(state.a1[i]); });
    h.n_reflect = integrate_grid(
        state.grid, [&](std::size_t i) { return std::norm(state.a2[i]); });
    h.n_swap = integrate_grid(
        state.grid, [&](std::size_t i) { return std::norm(state.a3[i]); });
    h.overlap_23 = integrate_grid(state.grid, [&](std::size_t i) {
        return std::conj(state.a2[i]) * state.a3[i];
    });

    h.p = h.n_unswapped + h.n_reflect + h.n_swap;
    if (h.p < 1e-12) {
        throw std::domain_error("herald: vanishing norm, fidelity undefined");
    }
    const double singlet =
        0.5 * (h.n_reflect + h.n_swap - 2.0 * std::real(h.overlap_23));
    h.fidelity = singlet / h.p;
    h.p_overall = p_cav * h.p;

    h.p_emit_b = h.n_swap;
    const double r_norm = h.n_reflect + h.n_swap;
    h.fidelity_r = r_norm > 0.0 ? singlet / r_norm : 0.0;
    h.fidelity_r_amp = std::sqrt(std::max(h.fidelity_r, 0.0));
    return h;
}

std::vector<HeraldResult> fidelity_vs_time(const CavityParams& a,
                                           const CavityParams& b,
                                           const std::vector<double>& t_grid,
                                           const FrequencyGrid& grid) {
    const double p_cav = emission_probability(a);
    const PacketScatterModel model(spectral_amplitude(a, grid), b, kInvSqrt2,
                                   kInvSqrt2);
    std::vector<HeraldResult> out(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        out[i] = model.herald_at(t_grid[i], p_cav);
    }
    return out;
}

std::vector<GammaSweepPoint> herald_prob_vs_gamma(
    const CavityParams& a_template, const CavityParams& b,
    const std::vector<double>& gamma1_grid) {
    const double t_end =
        (kHeraldStartUnits + kHeraldWaitUnits) / (0.5 * b.kappa);

    std::vector<GammaSweepPoint> points(gamma1_grid.size());
    parallel_for(gamma1_grid.size(), [&](std::size_t i) {
        CavityParams a = a_template;
        a.gamma = gamma1_grid[i];
        a.g = (a.kappa - a.gamma) / (8.0 * std::sqrt(2.0));
        const double p_cav = emission_probability(a);
        const auto s = spectral_amplitude(a, default_grid(a));

        CavityParams b0 = b;
        b0.gamma = 0.0;
        GammaSweepPoint pt;
        pt.gamma1 = a.gamma;
        pt.with_gamma2_zero =
            PacketScatterModel(s, b0, kInvSqrt2, kInvSqrt2).herald_at(t_end, p_cav);
        pt.with_gamma2 =
            PacketScatterModel(s, b, kInvSqrt2, kInvSqrt2).herald_at(t_end, p_cav);
        points[i] = pt;
    });
    return points;
}

}  // namespace cqed
