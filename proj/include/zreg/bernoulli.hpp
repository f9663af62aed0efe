#pragma once

#include <cstdint>
#include <vector>

#include "zreg/complexval.hpp"
#include "zreg/primes.hpp"
#include "zreg/rational.hpp"

namespace zreg {

// Exact b_0..b_{n_max} in the signed convention b_1 = -1/2 (fixed by the
// -z/2 term of the binomial-Bernoulli series), via the standard recurrence.
// n_max capped at 200.
std::vector<BigRational> bernoulli_numbers(unsigned n_max);

// The positive convention B_k = |b_{2k}|: B_1 = 1/6, B_2 = 1/30, ...
BigRational bernoulli_positive(unsigned k);

// Partial sum of the binomial-Bernoulli series as an exact polynomial:
//   b_n(z) = sum_{r=0..n} C(z, r) b_r
// (the r = 0 constant term is included). Degree <= n; n capped at 100.
RationalPolynomial bernoulli_series_poly(unsigned n);

// The integer roots forced on b_n(z) (even n) by vanishing odd Bernoulli
// numbers: every odd z in [3, n+1], where the partial sum is complete, plus
// z = n+2, where the one missing odd term has a zero coefficient.
std::vector<long> forced_roots(unsigned n);

// Quotient after dividing b_n(z) by b_n/n! and the forced linear factors;
// exact division, degree n/2 - 1. Even n in [2, 40]. A nonzero remainder
// (which would contradict the factorization) raises TableError.
RationalPolynomial trivial_zero_quotient(unsigned n);

// Numeric partial sum of the same series at complex z.
ComplexValue bernoulli_series_partial(ComplexValue z, unsigned n);

// The regularized limit of the series, b(z) = -z zeta(1-z); b(0) = 0 by the
// explicit z factor.
ComplexValue bernoulli_series_limit(ComplexValue z);

struct SeriesExtrapolation {
  std::vector<std::pair<unsigned, ComplexValue>> partials;  // (n, b_n(z))
  ComplexValue estimate;  // Richardson (Neville at nodes 1/j -> 0)
};

// Documented stand-in for the series regularization: even-order partial
// sums with polynomial Richardson extrapolation in n. Reported, never
// asserted: the raw partial sums may well diverge.
SeriesExtrapolation bernoulli_series_extrapolated(ComplexValue z,
                                                  unsigned max_even = 24);

struct ZetaViaBernoulli {
  ComplexValue value;      // -b(1-z) e^{P_n(z)-integral}
  ComplexValue reference;  // regularized zeta
  double abs_err = 0.0;
  std::uint64_t n_primes = 0;
};

// Diagnostic for the exponential bridge zeta(z) = -b(1-z) e^{P(z)}: the
// right side at finite truncation against the regularized zeta value.
ZetaViaBernoulli zeta_via_bernoulli(ComplexValue z, std::uint64_t n_primes,
                                    const PrimeTable& table);

// Exact Bernoulli polynomial value B_n(x) = sum C(n,k) b_k x^{n-k}, n <= 100.
BigRational bernoulli_poly(unsigned n, const BigRational& x);

// Periodic completely multiplicative character modulo f, zero off units.
class DirichletCharacter {
 public:
  static DirichletCharacter principal(std::uint64_t modulus);
  // Legendre symbol character modulo an odd prime.
  static DirichletCharacter quadratic(std::uint64_t p);
  // Arbitrary value table; the character invariants are validated.
  static DirichletCharacter from_values(std::uint64_t modulus,
                                        std::vector<ComplexValue> values);

  std::uint64_t modulus() const { return modulus_; }
  ComplexValue value(std::uint64_t a) const { return values_[a % modulus_]; }
  bool is_real() const { return !exact_.empty(); }
  // Value in {-1, 0, 1}; requires is_real().
  int exact_value(std::uint64_t a) const;

 private:
  DirichletCharacter() = default;
  void detect_exact();
  void validate() const;
  std::uint64_t modulus_ = 1;
  std::vector<ComplexValue> values_;
  std::vector<int> exact_;
};

// Generalized Bernoulli number B_{n,chi} = f^{n-1} sum_{a=1..f} chi(a) B_n(a/f).
ComplexValue generalized_bernoulli(const DirichletCharacter& chi, unsigned n);
// Exact value for real characters.
BigRational generalized_bernoulli_exact(const DirichletCharacter& chi,
                                        unsigned n);

}  // namespace zreg
