#pragma once

#include <functional>

#include "zreg/complexval.hpp"

namespace zreg {

// Double-exponential (tanh-sinh) quadrature of f over (0, L). The node map
// keeps full relative precision near the left endpoint, so integrable
// endpoint singularities like u^{-z} with Re z < 1 converge cleanly.
ComplexValue integrate_tanh_sinh(const std::function<ComplexValue(double)>& f,
                                 double length, double tol = 1e-11,
                                 int max_level = 12);

double integrate_tanh_sinh_real(const std::function<double(double)>& f,
                                double length, double tol = 1e-11,
                                int max_level = 12);

}  // namespace zreg
