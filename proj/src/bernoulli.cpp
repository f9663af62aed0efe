#include "zreg/bernoulli.hpp"

#include <cmath>
#include <numeric>

#include "zreg/prime_zeta.hpp"
#include "zreg/special.hpp"
#include "zreg/zeta.hpp"

namespace zreg {

std::vector<BigRational> bernoulli_numbers(unsigned n_max) {
  if (n_max > 200) throw CapacityError("bernoulli_numbers: n_max capped at 200");
  std::vector<BigRational> b(n_max + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= n_max; ++m) {
    BigRational s(0);
    for (unsigned j = 0; j < m; ++j)
      s += BigRational(binomial_int(m + 1, j)) * b[j];
    b[m] = -s / BigRational(m + 1);
  }
  return b;
}

BigRational bernoulli_positive(unsigned k) {
  if (k == 0) return 1;
  BigRational v = bernoulli_numbers(2 * k)[2 * k];
  return v < 0 ? BigRational(-v) : v;
}

RationalPolynomial bernoulli_series_poly(unsigned n) {
  if (n > 100) throw CapacityError("bernoulli_series_poly: n capped at 100");
  std::vector<BigRational> b = bernoulli_numbers(n);
  RationalPolynomial acc = RationalPolynomial::constant(1);  // r = 0 term
  RationalPolynomial binom_r = RationalPolynomial::constant(1);
  for (unsigned r = 1; r <= n; ++r) {
    // C(z, r) = C(z, r-1) * (z - (r-1)) / r
    binom_r = binom_r *
              RationalPolynomial({BigRational(-static_cast<long>(r) + 1),
                                  BigRational(1)}) *
              BigRational(1, r);
    if (b[r] != 0) acc = acc + binom_r * b[r];
  }
  return acc;
}

std::vector<long> forced_roots(unsigned n) {
  if (n == 0 || n % 2 != 0)
    throw DomainError("forced_roots: n must be even and positive");
  std::vector<long> roots;
  for (long z = 3; z <= static_cast<long>(n) + 1; z += 2) roots.push_back(z);
  roots.push_back(static_cast<long>(n) + 2);
  return roots;
}

RationalPolynomial trivial_zero_quotient(unsigned n) {
  if (n == 0 || n % 2 != 0 || n > 40)
    throw DomainError("trivial_zero_quotient: n must be even in [2, 40]");
  RationalPolynomial poly = bernoulli_series_poly(n);
  BigRational lead = bernoulli_numbers(n)[n] / BigRational(factorial_int(n));
  std::vector<BigRational> roots;
  for (long r : forced_roots(n)) roots.push_back(BigRational(r));
  RationalPolynomial divisor = RationalPolynomial::from_roots(roots) * lead;
  auto quotient = poly.divide_exact(divisor);
  if (!quotient)
    throw TableError("trivial_zero_quotient: series polynomial of order " +
                     std::to_string(n) +
                     " is not divisible by the expected factors");
  return *quotient;
}

ComplexValue bernoulli_series_partial(ComplexValue z, unsigned n) {
  if (n > 200) throw CapacityError("bernoulli_series_partial: n capped at 200");
  std::vector<BigRational> b = bernoulli_numbers(n);
  KahanSum s;
  s.add(ComplexValue(1.0, 0.0));
  ComplexValue binom_r = 1.0;
  for (unsigned r = 1; r <= n; ++r) {
    binom_r *= (z - static_cast<double>(r - 1)) / static_cast<double>(r);
    if (b[r] != 0) s.add(binom_r * to_double(b[r]));
  }
  return s.value();
}

ComplexValue bernoulli_series_limit(ComplexValue z) {
  if (z == ComplexValue(0.0, 0.0)) return 0.0;  // explicit z factor
  return -z * zeta_analytic(1.0 - z);
}

SeriesExtrapolation bernoulli_series_extrapolated(ComplexValue z,
                                                  unsigned max_even) {
  if (max_even < 2 || max_even % 2 != 0)
    throw DomainError("bernoulli_series_extrapolated: max_even must be even >= 2");
  SeriesExtrapolation out;
  std::vector<double> nodes;
  std::vector<ComplexValue> values;
  for (unsigned n = 2; n <= max_even; n += 2) {
    ComplexValue v = bernoulli_series_partial(z, n);
    out.partials.emplace_back(n, v);
    nodes.push_back(1.0 / static_cast<double>(n / 2));
    values.push_back(v);
  }
  // Neville extrapolation of the sequence to node 0.
  std::vector<ComplexValue> tab = values;
  std::size_t m = tab.size();
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i) {
      double xi = nodes[i];
      double xl = nodes[i - level];
      tab[i] = (tab[i] * xl - tab[i - 1] * xi) / (xl - xi);
      if (i == level) break;
    }
  out.estimate = tab.back();
  return out;
}

ZetaViaBernoulli zeta_via_bernoulli(ComplexValue z, std::uint64_t n_primes,
                                    const PrimeTable& table) {
  ZetaViaBernoulli out;
  out.n_primes = n_primes;
  ComplexValue b = bernoulli_series_limit(1.0 - z);
  ComplexValue p_hat = prime_zeta_regularized(z, n_primes, table);
  out.value = -b * std::exp(p_hat);
  out.reference = zeta_regularized(z);
  out.abs_err = std::abs(out.value - out.reference);
  return out;
}

BigRational bernoulli_poly(unsigned n, const BigRational& x) {
  if (n > 100) throw CapacityError("bernoulli_poly: n capped at 100");
  std::vector<BigRational> b = bernoulli_numbers(n);
  BigRational acc(0);
  BigRational xpow(1);
  // sum_{k=0..n} C(n,k) b_k x^{n-k}: accumulate from k = n down so x powers
  // build up multiplicatively.
  for (unsigned k = 0; k <= n; ++k) {
    unsigned kk = n - k;  // exponent of x is k
    acc += BigRational(binomial_int(n, kk)) * b[kk] * xpow;
    xpow *= x;
  }
  return acc;
}

DirichletCharacter DirichletCharacter::principal(std::uint64_t modulus) {
  if (modulus == 0) throw DomainError("character modulus must be positive");
  DirichletCharacter chi;
  chi.modulus_ = modulus;
  chi.values_.resize(modulus);
  for (std::uint64_t a = 0; a < modulus; ++a)
    chi.values_[a] = std::gcd(a, modulus) == 1 ? 1.0 : 0.0;
  if (modulus == 1) chi.values_[0] = 1.0;
  chi.detect_exact();
  chi.validate();
  return chi;
}

DirichletCharacter DirichletCharacter::quadratic(std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
    throw DomainError("quadratic character: modulus must be an odd prime");
  DirichletCharacter chi;
  chi.modulus_ = p;
  chi.values_.assign(p, -1.0);
  chi.values_[0] = 0.0;
  for (std::uint64_t x = 1; x <= (p - 1) / 2; ++x)
    chi.values_[(x * x) % p] = 1.0;
  chi.detect_exact();
  chi.validate();
  return chi;
}

DirichletCharacter DirichletCharacter::from_values(
    std::uint64_t modulus, std::vector<ComplexValue> values) {
  if (modulus == 0 || values.size() != modulus)
    throw DomainError("character value table must have exactly f entries");
  DirichletCharacter chi;
  chi.modulus_ = modulus;
  chi.values_ = std::move(values);
  chi.detect_exact();
  chi.validate();
  return chi;
}

void DirichletCharacter::detect_exact() {
  exact_.clear();
  std::vector<int> out(values_.size());
  for (std::size_t a = 0; a < values_.size(); ++a) {
    ComplexValue v = values_[a];
    if (std::abs(v.imag()) > 1e-12) return;
    double r = v.real();
    if (std::abs(r) < 1e-12)
      out[a] = 0;
    else if (std::abs(r - 1.0) < 1e-12)
      out[a] = 1;
    else if (std::abs(r + 1.0) < 1e-12)
      out[a] = -1;
    else
      return;
  }
  exact_ = std::move(out);
}

void DirichletCharacter::validate() const {
  std::uint64_t f = modulus_;
  if (f == 1) {
    if (std::abs(values_[0] - 1.0) > 1e-12)
      throw TableError("trivial character must be identically 1");
    return;
  }
  if (std::abs(values_[1] - 1.0) > 1e-12)
    throw TableError("character: chi(1) must be 1");
  for (std::uint64_t a = 0; a < f; ++a) {
    bool unit = std::gcd(a, f) == 1;
    if (!unit && std::abs(values_[a]) > 1e-12)
      throw TableError("character: chi must vanish off the units");
    if (unit && std::abs(values_[a]) < 1e-12)
      throw TableError("character: chi must not vanish on a unit");
  }
  // Complete multiplicativity on units; exhaustive up to f = 256, sampled
  // diagonal beyond.
  std::uint64_t limit = f <= 256 ? f : 256;
  for (std::uint64_t a = 1; a < limit; ++a) {
    if (std::gcd(a, f) != 1) continue;
    for (std::uint64_t b = a; b < limit; ++b) {
      if (std::gcd(b, f) != 1) continue;
      ComplexValue lhs = values_[(a * b) % f];
      ComplexValue rhs = values_[a % f] * values_[b % f];
      if (std::abs(lhs - rhs) > 1e-9)
        throw TableError("character: multiplicativity fails at (" +
                         std::to_string(a) + ", " + std::to_string(b) + ")");
    }
  }
}

int DirichletCharacter::exact_value(std::uint64_t a) const {
  if (!is_real()) throw DomainError("exact_value: character is not real");
  return exact_[a % modulus_];
}

BigRational generalized_bernoulli_exact(const DirichletCharacter& chi,
                                        unsigned n) {
  if (n > 100) throw CapacityError("generalized_bernoulli: n capped at 100");
  if (!chi.is_real())
    throw DomainError("generalized_bernoulli_exact: character must be real");
  std::uint64_t f = chi.modulus();
  BigRational sum(0);
  for (std::uint64_t a = 1; a <= f; ++a) {
    int c = chi.exact_value(a);
    if (c == 0) continue;
    sum += BigRational(c) * bernoulli_poly(n, BigRational(a, f));
  }
  // Scale by f^{n-1} (1/f when n = 0).
  if (n == 0) return sum / BigRational(BigInt(f));
  BigRational fpow(1);
  for (unsigned k = 1; k < n; ++k) fpow *= BigRational(BigInt(f));
  return sum * fpow;
}

ComplexValue generalized_bernoulli(const DirichletCharacter& chi, unsigned n) {
  if (n > 100) throw CapacityError("generalized_bernoulli: n capped at 100");
  if (chi.is_real())
    return {to_double(generalized_bernoulli_exact(chi, n)), 0.0};
  std::uint64_t f = chi.modulus();
  KahanSum sum;
  for (std::uint64_t a = 1; a <= f; ++a) {
    ComplexValue c = chi.value(a);
    if (std::abs(c) < 1e-15) continue;
    sum.add(c * to_double(bernoulli_poly(n, BigRational(a, f))));
  }
  double fpow = std::pow(static_cast<double>(f), static_cast<double>(n) - 1.0);
  return sum.value() * fpow;
}

}  // namespace zreg
