#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zreg/complexval.hpp"
#include "zreg/primes.hpp"

namespace zreg {

// Partial sum over the first n integers, sum_{k<=n} k^{-z}, ascending k,
// compensated.
ComplexValue zeta_partial_sum(ComplexValue z, std::uint64_t n,
                              unsigned threads = 1);

// Partial Euler product over the first n primes, prod (1 - p^{-z})^{-1},
// factors combined in ascending index order (fixed block fold).
ComplexValue euler_product_partial(ComplexValue z, std::uint64_t n,
                                   const PrimeTable& table,
                                   unsigned threads = 1);

// Alternating partial sum sum_{k<=n} (-1)^{k-1} k^{-z}.
ComplexValue alternating_partial_sum(ComplexValue z, std::uint64_t n);

// The regularized zeta value (1 - 2^{1-z})^{-1} sum (-1)^{n-1} n^{-z},
// evaluated with Chebyshev-coefficient series acceleration so the strip
// 0 < Re z < 1 converges at full double precision. Throws DomainError at
// z = 1 and whenever |1 - 2^{1-z}| < 1e-8.
ComplexValue zeta_regularized(ComplexValue z);

// Cutoff regularization zeta_n(z) = sum_{k<=n} k^{-z} - n^{1-z}/(1-z).
ComplexValue zeta_cutoff(ComplexValue z, std::uint64_t n, unsigned threads = 1);

// Ratio of the 2n-term to the n-term Euler product, computed directly as
// the product over the window of prime indices n+1..2n (never as a quotient
// of two possibly overflowing products).
ComplexValue euler_window_ratio(ComplexValue z, std::uint64_t n,
                                const PrimeTable& table, unsigned threads = 1);

// Reconstruction of the regularized zeta value from the window ratio f:
//   (f - 2^{1-z}) / (f - 1) * n^{1-z} / (z - 1).
// DomainError when |f - 1| < 1e-14 or z = 1.
ComplexValue zeta_from_window_ratio(ComplexValue z, std::uint64_t n,
                                    const PrimeTable& table,
                                    unsigned threads = 1);

// Algebraically identical route through the two partial products,
//   (P_{2n} - 2^{1-z} P_n) / (P_{2n} - P_n) * n^{1-z} / (z - 1);
// usable only where both products stay inside double range.
ComplexValue zeta_from_partial_products(ComplexValue z, std::uint64_t n,
                                        const PrimeTable& table,
                                        unsigned threads = 1);

// Symmetrized window sum
//   sum_{k=n+1..2n} sum_{m<=depth} (1/m) (p_k^{-m rho} + p_k^{-m(1-rho)}).
ComplexValue window_log_sum(ComplexValue rho, std::uint64_t n, unsigned depth,
                            const PrimeTable& table, unsigned threads = 1);

// Gap sigma_n(z) = partial sum - partial product over the same n.
ComplexValue sum_product_gap(ComplexValue z, std::uint64_t n,
                             const PrimeTable& table, unsigned threads = 1);

// Regularized zeta extended to the whole plane minus z = 1: the alternating
// route for Re z >= 0 and the functional equation for Re z < 0.
ComplexValue zeta_analytic(ComplexValue z);

// Hardy's real function Re[exp(i theta(t)) zeta(1/2 + it)]; vanishes exactly
// at the ordinates of the critical-line zeros.
double hardy_z(double t);

struct ZeroScan {
  std::vector<double> ordinates;      // refined to 1e-8
  std::vector<std::string> warnings;  // step-too-coarse notices
};

// Sign-change scan of hardy_z on [t_min, t_max] with the given grid step;
// each bracket is refined by bisection. Midpoints of sign-preserving grid
// intervals are inspected so that a pair of zeros inside one step is still
// caught (and reported as a step-too-coarse warning).
ZeroScan scan_critical_zeros(double t_min, double t_max, double step = 0.05);

}  // namespace zreg
