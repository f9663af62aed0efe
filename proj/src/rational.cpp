#include "zreg/rational.hpp"

namespace zreg {

BigInt binomial_int(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;
  }
  return r;
}

BigInt factorial_int(unsigned n) {
  BigInt r = 1;
  for (unsigned j = 2; j <= n; ++j) r *= j;
  return r;
}

std::string to_string(const BigRational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

RationalPolynomial::RationalPolynomial(std::vector<BigRational> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

RationalPolynomial RationalPolynomial::constant(BigRational c) {
  return RationalPolynomial({std::move(c)});
}

RationalPolynomial RationalPolynomial::from_roots(
    const std::vector<BigRational>& roots) {
  RationalPolynomial p = constant(1);
  for (const BigRational& r : roots)
    p = p * RationalPolynomial({-r, BigRational(1)});
  return p;
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigRational& RationalPolynomial::coeff(std::size_t k) const {
  static const BigRational zero(0);
  return k < coeffs_.size() ? coeffs_[k] : zero;
}

BigRational RationalPolynomial::evaluate(const BigRational& x) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

ComplexValue RationalPolynomial::evaluate(ComplexValue x) const {
  ComplexValue acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + to_double(*it);
  return acc;
}

RationalPolynomial RationalPolynomial::operator+(
    const RationalPolynomial& other) const {
  std::vector<BigRational> out(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + other.coeff(i);
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator-(
    const RationalPolynomial& other) const {
  std::vector<BigRational> out(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - other.coeff(i);
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator*(
    const RationalPolynomial& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<BigRational> out(coeffs_.size() + other.coeffs_.size() - 1,
                               BigRational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * other.coeffs_[j];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator*(const BigRational& s) const {
  std::vector<BigRational> out = coeffs_;
  for (auto& c : out) c *= s;
  return RationalPolynomial(std::move(out));
}

std::optional<RationalPolynomial> RationalPolynomial::divide_exact(
    const RationalPolynomial& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  std::vector<BigRational> rem = coeffs_;
  int dq = static_cast<int>(rem.size()) - static_cast<int>(divisor.coeffs_.size());
  if (dq < 0) return is_zero() ? std::make_optional(RationalPolynomial{}) : std::nullopt;
  std::vector<BigRational> quot(static_cast<std::size_t>(dq) + 1, BigRational(0));
  const BigRational& lead = divisor.coeffs_.back();
  for (int k = dq; k >= 0; --k) {
    BigRational q = rem[static_cast<std::size_t>(k) + divisor.coeffs_.size() - 1] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q != 0)
      for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j)
        rem[static_cast<std::size_t>(k) + j] -= q * divisor.coeffs_[j];
  }
  for (const BigRational& r : rem)
    if (r != 0) return std::nullopt;
  return RationalPolynomial(std::move(quot));
}

std::vector<std::string> RationalPolynomial::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(to_string(c));
  return out;
}

}  // namespace zreg
