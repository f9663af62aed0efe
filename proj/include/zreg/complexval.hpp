#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>

#include "zreg/errors.hpp"

namespace zreg {

// The working scalar for every analytic evaluation. Double precision
// throughout; exact identities are handled by BigRational instead.
using ComplexValue = std::complex<double>;

inline bool is_finite(ComplexValue v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

void require_finite(ComplexValue v, const char* what);

// b^z and b^{-z} for real b > 0 through exp(z log b) with the real log,
// so the branch is unambiguous for every prime power in the code base.
inline ComplexValue cpow(double base, ComplexValue z) {
  return std::exp(z * std::log(base));
}
inline ComplexValue inv_cpow(double base, ComplexValue z) {
  return std::exp(-z * std::log(base));
}

// Kahan-Neumaier compensated accumulator, one compensation per component.
// Used wherever a sum can exceed ~10^4 terms so that 1e-12 verification
// tolerances stay meaningful.
class KahanSum {
 public:
  void add(ComplexValue x) {
    re_.add(x.real());
    im_.add(x.imag());
  }
  void add(double x) { re_.add(x); }
  ComplexValue value() const { return {re_.value(), im_.value()}; }
  double real() const { return re_.value(); }

 private:
  struct Channel {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
      double t = sum + x;
      if (std::abs(sum) >= std::abs(x))
        comp += (sum - t) + x;
      else
        comp += (x - t) + sum;
      sum = t;
    }
    double value() const { return sum + comp; }
  };
  Channel re_, im_;
};

// 17 significant digits: round-trip safe for IEEE doubles.
std::string fmt17(double v);

// "a+bi" / "a-bi" with optional whitespace; bare "a" and "bi" accepted.
std::string format_complex(ComplexValue v);
ComplexValue parse_complex(const std::string& text);

}  // namespace zreg
