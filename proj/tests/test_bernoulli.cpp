#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "zreg/bernoulli.hpp"
#include "zreg/zeta.hpp"

using namespace zreg;
using zreg::testing::Cx;
namespace ref = zreg::testing::ref;

namespace {

// Independent construction of the binomial polynomial C(z, r).
RationalPolynomial binom_poly(unsigned r) {
  std::vector<BigRational> roots;
  for (unsigned j = 0; j < r; ++j) roots.push_back(BigRational(j));
  return RationalPolynomial::from_roots(roots) * BigRational(1, factorial_int(r));
}

// Truncated rational power series used by the generating-function oracle.
using Series = std::vector<BigRational>;  // coefficients of t^0..t^k

Series series_mul(const Series& a, const Series& b, std::size_t order) {
  Series out(order + 1, BigRational(0));
  for (std::size_t i = 0; i <= order && i < a.size(); ++i)
    for (std::size_t j = 0; i + j <= order && j < b.size(); ++j)
      out[i + j] += a[i] * b[j];
  return out;
}

Series series_inverse(const Series& a, std::size_t order) {
  // a[0] must be nonzero; classic recursive inversion.
  Series inv(order + 1, BigRational(0));
  inv[0] = BigRational(1) / a[0];
  for (std::size_t n = 1; n <= order; ++n) {
    BigRational acc(0);
    for (std::size_t k = 1; k <= n && k < a.size(); ++k)
      acc += a[k] * inv[n - k];
    inv[n] = -acc / a[0];
  }
  return inv;
}

// B_{n,chi} for real chi through the generating function
//   sum_a chi(a) t e^{at} / (e^{ft} - 1) = sum_n B_{n,chi} t^n / n!.
BigRational gen_bernoulli_by_series(const DirichletCharacter& chi, unsigned n,
                                    std::size_t order) {
  std::uint64_t f = chi.modulus();
  // D(t) = (e^{ft} - 1)/t,  so t e^{at}/(e^{ft}-1) = e^{at} / D(t).
  Series d(order + 1, BigRational(0));
  BigRational fpow(1);
  for (std::size_t k = 0; k <= order; ++k) {
    fpow *= BigRational(BigInt(f));
    d[k] = fpow / BigRational(factorial_int(static_cast<unsigned>(k) + 1));
  }
  Series dinv = series_inverse(d, order);
  Series total(order + 1, BigRational(0));
  for (std::uint64_t a = 1; a <= f; ++a) {
    int c = chi.exact_value(a);
    if (c == 0) continue;
    Series ea(order + 1, BigRational(0));
    BigRational apow(1);
    for (std::size_t k = 0; k <= order; ++k) {
      ea[k] = apow / BigRational(factorial_int(static_cast<unsigned>(k)));
      apow *= BigRational(BigInt(a));
    }
    Series term = series_mul(ea, dinv, order);
    for (std::size_t k = 0; k <= order; ++k) total[k] += BigRational(c) * term[k];
  }
  return total[n] * BigRational(factorial_int(n));
}

}  // namespace

TEST_CASE("bernoulli numbers, both conventions") {
  auto b = bernoulli_numbers(12);
  CHECK(b[0] == 1);
  CHECK(b[1] == BigRational(-1, 2));
  CHECK(b[2] == BigRational(1, 6));
  CHECK(b[3] == 0);
  CHECK(b[5] == 0);
  CHECK(b[12] == BigRational(-691, 2730));

  CHECK(bernoulli_positive(1) == BigRational(1, 6));
  CHECK(bernoulli_positive(2) == BigRational(1, 30));
  CHECK(bernoulli_positive(3) == BigRational(1, 42));
  CHECK(bernoulli_positive(4) == BigRational(1, 30));

  CHECK_THROWS_AS(bernoulli_numbers(201), CapacityError);
}

TEST_CASE("series polynomials match the factored forms exactly") {
  // b_2(z) = (1/12)(z-3)(z-4) = z^2/12 - 7z/12 + 1.
  RationalPolynomial b2 = bernoulli_series_poly(2);
  CHECK(b2 == RationalPolynomial({BigRational(1), BigRational(-7, 12),
                                  BigRational(1, 12)}));
  CHECK(b2 == RationalPolynomial::from_roots({BigRational(3), BigRational(4)}) *
                  BigRational(1, 12));

  RationalPolynomial b4 = bernoulli_series_poly(4);
  CHECK(b4 == RationalPolynomial::from_roots({BigRational(3), BigRational(5),
                                              BigRational(6), BigRational(-8)}) *
                  BigRational(-1, 720));

  RationalPolynomial b6 = bernoulli_series_poly(6);
  RationalPolynomial quad({BigRational(36), BigRational(8), BigRational(1)});
  CHECK(b6 == RationalPolynomial::from_roots({BigRational(3), BigRational(5),
                                              BigRational(7), BigRational(8)}) *
                  quad * BigRational(1, 30240));
}

TEST_CASE("series telescoping is exact polynomial algebra") {
  auto b = bernoulli_numbers(40);
  for (unsigned n = 4; n <= 40; n += 2) {
    RationalPolynomial diff =
        bernoulli_series_poly(n) - bernoulli_series_poly(n - 2);
    RationalPolynomial expected =
        binom_poly(n - 1) * b[n - 1] + binom_poly(n) * b[n];
    CHECK(diff == expected);
  }
}

TEST_CASE("trivial-zero pattern of the series polynomials") {
  auto b = bernoulli_numbers(40);
  for (unsigned n = 2; n <= 40; n += 2) {
    RationalPolynomial poly = bernoulli_series_poly(n);
    // Exact vanishing at every odd integer in [3, n+1] and at n+2.
    for (long root : forced_roots(n))
      CHECK(poly.evaluate(BigRational(root)) == 0);
    // The even endpoint z = n is NOT a zero: the value there is b_n itself
    // (complete binomial sum), which pins the factored form's even root at
    // n+2 rather than n.
    CHECK(poly.evaluate(BigRational(n)) == b[n]);
    CHECK(b[n] != 0);
  }
}

TEST_CASE("reduced factors after removing the trivial zeros") {
  CHECK(trivial_zero_quotient(2) == RationalPolynomial::constant(1));
  CHECK(trivial_zero_quotient(4) ==
        RationalPolynomial({BigRational(8), BigRational(1)}));
  CHECK(trivial_zero_quotient(6) ==
        RationalPolynomial({BigRational(36), BigRational(8), BigRational(1)}));
  for (unsigned n = 8; n <= 40; n += 2) {
    RationalPolynomial g = trivial_zero_quotient(n);
    CHECK(g.degree() == static_cast<int>(n / 2) - 1);
    CHECK(g.coeffs().back() == 1);  // monic
  }
  CHECK_THROWS_AS(trivial_zero_quotient(3), DomainError);
  CHECK_THROWS_AS(trivial_zero_quotient(42), DomainError);
}

TEST_CASE("bernoulli polynomial values") {
  CHECK(bernoulli_poly(0, BigRational(7, 3)) == 1);
  CHECK(bernoulli_poly(1, BigRational(1, 2)) == 0);
  // Symmetry B_n(1-x) = (-1)^n B_n(x).
  for (unsigned n : {2u, 3u, 5u, 8u}) {
    BigRational x(2, 7);
    BigRational lhs = bernoulli_poly(n, BigRational(5, 7));
    BigRational rhs = bernoulli_poly(n, x);
    if (n % 2 == 1) rhs = -rhs;
    CHECK(lhs == rhs);
  }
  // Difference equation B_n(x+1) - B_n(x) = n x^{n-1}.
  for (unsigned n = 1; n <= 20; ++n) {
    for (BigRational x : {BigRational(0), BigRational(1, 3), BigRational(-5, 4),
                          BigRational(9, 2)}) {
      BigRational lhs = bernoulli_poly(n, x + 1) - bernoulli_poly(n, x);
      BigRational xp(1);
      for (unsigned j = 0; j + 1 < n; ++j) xp *= x;
      CHECK(lhs == BigRational(n) * xp);
    }
  }
}

TEST_CASE("series limit via the functional equation") {
  CHECK(bernoulli_series_limit(Cx(0, 0)) == Cx(0, 0));
  CHECK(std::abs(bernoulli_series_limit(Cx(-1, 0)) - ref::zeta_two) < 1e-12);
  CHECK(std::abs(bernoulli_series_limit(Cx(2, 0)) - Cx(1.0 / 6.0, 0)) < 1e-12);
}

TEST_CASE("integer-argument partial sums reproduce negative zeta values") {
  for (double z : {2.0, 3.0, 4.0, 6.0}) {
    Cx prediction = -bernoulli_series_partial(Cx(z, 0), 16) / Cx(z, 0);
    Cx reference = z == 3.0 ? Cx(0, 0) : zeta_analytic(Cx(1.0 - z, 0));
    CHECK(std::abs(prediction - reference) < 1e-9);
  }
}

TEST_CASE("series extrapolation is reported with its partials") {
  auto ext = bernoulli_series_extrapolated(Cx(2, 0), 12);
  CHECK(ext.partials.size() == 6);
  CHECK(ext.partials.front().first == 2);
  CHECK(ext.partials.back().first == 12);
  // At integer arguments the sequence is eventually constant, so the
  // extrapolation must reproduce it.
  CHECK(std::abs(ext.estimate - Cx(1.0 / 6.0, 0)) < 1e-9);
  CHECK_THROWS_AS(bernoulli_series_extrapolated(Cx(2, 0), 7), DomainError);
}

TEST_CASE("exponential bridge diagnostic") {
  const PrimeTable& t = zreg::testing::shared_primes(20000);
  auto d1 = zeta_via_bernoulli(Cx(0.6, 0), 10000, t);
  auto d2 = zeta_via_bernoulli(Cx(0.6, 0), 20000, t);
  CHECK(is_finite(d1.value));
  CHECK(std::abs(d1.reference - zeta_regularized(Cx(0.6, 0))) == 0.0);
  CHECK(d1.abs_err == std::abs(d1.value - d1.reference));
  // Cutoff doubling moves the truncated value; the delta is the report.
  CHECK(d1.value != d2.value);
}

TEST_CASE("dirichlet character constructors and validation") {
  auto triv = DirichletCharacter::principal(1);
  CHECK(triv.modulus() == 1);
  CHECK(triv.value(12345) == Cx(1, 0));

  auto psi7 = DirichletCharacter::quadratic(7);
  CHECK(psi7.is_real());
  for (std::uint64_t qr : {1ull, 2ull, 4ull}) CHECK(psi7.exact_value(qr) == 1);
  for (std::uint64_t nqr : {3ull, 5ull, 6ull}) CHECK(psi7.exact_value(nqr) == -1);
  CHECK(psi7.exact_value(7) == 0);
  CHECK(psi7.exact_value(8) == 1);  // periodicity

  CHECK_THROWS_AS(DirichletCharacter::quadratic(2), DomainError);
  CHECK_THROWS_AS(DirichletCharacter::quadratic(9), DomainError);

  // chi(1) != 1.
  CHECK_THROWS_AS(DirichletCharacter::from_values(3, {Cx(0, 0), Cx(-1, 0), Cx(1, 0)}),
                  TableError);
  // nonzero off units.
  CHECK_THROWS_AS(DirichletCharacter::from_values(4, {Cx(0, 0), Cx(1, 0), Cx(1, 0), Cx(-1, 0)}),
                  TableError);
  // not multiplicative: chi(2)^2 should be chi(4) mod 5.
  CHECK_THROWS_AS(DirichletCharacter::from_values(
                      5, {Cx(0, 0), Cx(1, 0), Cx(1, 0), Cx(-1, 0), Cx(-1, 0)}),
                  TableError);
}

TEST_CASE("generalized bernoulli numbers, exact route") {
  auto psi7 = DirichletCharacter::quadratic(7);
  CHECK(generalized_bernoulli_exact(psi7, 1) == BigRational(-1));
  CHECK(generalized_bernoulli_exact(psi7, 3) == BigRational(48, 7));

  auto psi11 = DirichletCharacter::quadratic(11);
  CHECK(generalized_bernoulli_exact(psi11, 1) == BigRational(-1));
  CHECK(generalized_bernoulli_exact(psi11, 3) == BigRational(18));

  auto psi23 = DirichletCharacter::quadratic(23);
  CHECK(generalized_bernoulli_exact(psi23, 1) == BigRational(-3));

  auto triv = DirichletCharacter::principal(1);
  CHECK(generalized_bernoulli_exact(triv, 2) == BigRational(1, 6));
}

TEST_CASE("generalized bernoulli matches the generating function expansion") {
  for (std::uint64_t f : {3ull, 7ull, 11ull}) {
    auto chi = DirichletCharacter::quadratic(f);
    for (unsigned n = 0; n <= 8; ++n)
      CHECK(generalized_bernoulli_exact(chi, n) ==
            gen_bernoulli_by_series(chi, n, 10));
  }
  for (std::uint64_t f : {1ull, 4ull, 12ull}) {
    auto chi = DirichletCharacter::principal(f);
    for (unsigned n = 0; n <= 8; ++n)
      CHECK(generalized_bernoulli_exact(chi, n) ==
            gen_bernoulli_by_series(chi, n, 10));
  }
}

TEST_CASE("generalized bernoulli for a complex character") {
  // Quartic character mod 5: chi(2) = i determines the table.
  auto chi = DirichletCharacter::from_values(
      5, {Cx(0, 0), Cx(1, 0), Cx(0, 1), Cx(0, -1), Cx(-1, 0)});
  CHECK(!chi.is_real());
  // B_{1,chi} = (1/5) sum a chi(a) = (1 + 2i - 3i - 4)/5.
  Cx expected = Cx(-3.0, -1.0) / 5.0;
  CHECK(std::abs(generalized_bernoulli(chi, 1) - expected) < 1e-13);
  CHECK_THROWS_AS(generalized_bernoulli_exact(chi, 1), DomainError);
}
