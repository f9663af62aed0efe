#pragma once

#include <cstdint>

#include "zreg/complexval.hpp"

namespace zreg {

// Complex gamma function. Lanczos approximation (g = 607/128, 15 terms),
// reflection for Re z < 1/2; better than 1e-12 relative on |z| <= 50 away
// from the poles. Throws DomainError within 1e-12 of a nonpositive integer.
ComplexValue gamma(ComplexValue z);

// log Gamma for Re z > 0, continuous along vertical lines (no branch
// jumps), suitable for phase computations at large |Im z|.
ComplexValue log_gamma(ComplexValue z);

// Generalized binomial coefficient C(z, r) = z(z-1)...(z-r+1)/r!, computed
// as the falling-factorial product so integer arguments are exact and no
// gamma poles are ever touched. C(z, 0) = 1.
ComplexValue binom(ComplexValue z, unsigned r);

// Factor of the functional equation zeta(z) = H(z) zeta(1-z):
//   H(z) = 2 Gamma(1-z) (2 pi)^{z-1} sin(pi z / 2).
// At even integers z = 2k >= 2 the gamma pole cancels against the sine zero;
// the limit value (-1)^k (2 pi)^{2k-1} pi / (2k-1)! is returned. At z = 1 and
// at odd integers z >= 3 the pole survives: DomainError.
ComplexValue functional_factor(ComplexValue z);

// Phase theta(t) with H(1/2 + it) = exp(-2 i theta(t)), so that
// exp(i theta(t)) zeta(1/2 + it) is real on the critical line:
//   theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi.
double phase_theta(double t);

}  // namespace zreg
