#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zreg/complexval.hpp"

namespace zreg {

// Arbitrary-precision rational scalar for the exact Bernoulli/polynomial
// identities. Always stored reduced with positive denominator.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt binomial_int(unsigned n, unsigned k);
BigInt factorial_int(unsigned n);

inline double to_double(const BigRational& r) { return r.convert_to<double>(); }
std::string to_string(const BigRational& r);  // "p/q", or "p" when q == 1

// Dense polynomial over BigRational, coefficients in ascending degree with
// trailing zeros trimmed. The zero polynomial has no coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<BigRational> coeffs);
  static RationalPolynomial constant(BigRational c);
  // Monic product prod (z - root).
  static RationalPolynomial from_roots(const std::vector<BigRational>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  const BigRational& coeff(std::size_t k) const;  // 0 past the degree

  BigRational evaluate(const BigRational& x) const;
  ComplexValue evaluate(ComplexValue x) const;

  RationalPolynomial operator+(const RationalPolynomial& other) const;
  RationalPolynomial operator-(const RationalPolynomial& other) const;
  RationalPolynomial operator*(const RationalPolynomial& other) const;
  RationalPolynomial operator*(const BigRational& scalar) const;
  bool operator==(const RationalPolynomial& other) const = default;

  // Exact division; nullopt when the remainder is nonzero.
  std::optional<RationalPolynomial> divide_exact(
      const RationalPolynomial& divisor) const;

  // Coefficient list as decimal strings, ascending degree.
  std::vector<std::string> coeff_strings() const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

}  // namespace zreg
