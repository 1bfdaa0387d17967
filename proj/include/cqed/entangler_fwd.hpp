#ifndef CQED_ENTANGLER_FWD_HPP
#define CQED_ENTANGLER_FWD_HPP

#include "cqed/types.hpp"

namespace cqed {

inline const cplx kInvSqrt2{0.70710678118654752440, 0.0};

// t_start and the waiting window, in units of 1 / (kappa_2 / 2).
inline constexpr double kHeraldStartUnits = 2.05;
inline constexpr double kHeraldWaitUnits = 14.95;

}  // namespace cqed

#endif
