#ifndef CQED_ODE_HPP
#define CQED_ODE_HPP

#include <functional>
#include <vector>

#include "cqed/types.hpp"

namespace cqed {

struct OdeTolerances {
    double rel = 1e-10;
    double abs = 1e-12;
};

struct OdeSolution {
    std::vector<double> times;
    std::vector<std::vector<cplx>> states;  // one vector per requested time
    OdeTolerances tolerances;
    long steps_accepted = 0;
    long steps_rejected = 0;

    const std::vector<cplx>& final_state() const { return states.back(); }
};

using OdeRhs =
    std::function<void(double t, const std::vector<cplx>& y, std::vector<cplx>& dydt)>;

// Adaptive embedded Runge-Kutta (Dormand-Prince 5(4)) for complex linear or
// driven systems. States are recorded at each time in sample_times, which
// must be increasing and start at or after t0. Throws std::runtime_error on
// step-size underflow; tolerances below 1e-14 are rejected as invalid.
OdeSolution integrate_ode(const OdeRhs& rhs, std::vector<cplx> y0, double t0,
                          const std::vector<double>& sample_times,
                          OdeTolerances tol = {});

}  // namespace cqed

#endif
