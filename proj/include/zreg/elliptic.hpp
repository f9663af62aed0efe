#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zreg/complexval.hpp"
#include "zreg/primes.hpp"
#include "zreg/rational.hpp"

namespace zreg {

// Integer long-Weierstrass curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
// The short constructor form (a, b, c, d) of Y^2 + aY = X^3 + bX^2 + cX + d
// maps to a1 = 0, a3 = a, a2 = b, a4 = c, a6 = d.
struct EllipticCurve {
  std::int64_t a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
  BigInt discriminant;
  std::string label;

  static EllipticCurve from_long(std::int64_t a1, std::int64_t a2,
                                 std::int64_t a3, std::int64_t a4,
                                 std::int64_t a6, std::string label = {});
  static EllipticCurve from_short(std::int64_t a, std::int64_t b,
                                  std::int64_t c, std::int64_t d,
                                  std::string label = {});
  // "a1,a2,a3,a4,a6" or "paper:a,b,c,d".
  static EllipticCurve parse(const std::string& spec, std::string label = {});
};

// Curve-list file: one spec per line, optional leading label, '#' comments.
std::vector<EllipticCurve> load_curve_file(const std::string& path);

// Reduction data at one prime. N_p is the AFFINE point count, so p - N_p is
// the usual trace a_p = p + 1 - #E(F_p) at good primes (the projective count
// adds the point at infinity).
struct LocalData {
  std::uint64_t p = 0;
  std::uint64_t affine_points = 0;  // N_p
  std::int64_t a_p = 0;             // p - N_p
  bool good_reduction = true;
};

// Full O(p^2) enumeration over F_p x F_p.
LocalData count_points_enumerate(const EllipticCurve& curve, std::uint64_t p);
// Quadratic-character count: complete the square, N_p = p + sum chi(g(x)).
// Odd p only.
LocalData count_points_character(const EllipticCurve& curve, std::uint64_t p);
// Dispatch: enumeration for p <= 1000 (and always for p = 2, 3), character
// sums beyond; p capped at 1e6.
LocalData count_points(const EllipticCurve& curve, std::uint64_t p);

// Reduction data for the first n primes, computed in parallel and returned
// in index order.
std::vector<LocalData> local_data_range(const EllipticCurve& curve,
                                        std::uint64_t n,
                                        const PrimeTable& table,
                                        unsigned threads = 1);

enum class BadPrimePolicy {
  // Same local factor 1/(1 - a_p p^{-z} + p^{1-2z}) at every prime.
  verbatim,
  // Standard degree-one factor 1/(1 - a_p p^{-z}) at bad primes.
  standard,
};

// Truncated L-series product over the first n primes.
ComplexValue l_series_partial(const EllipticCurve& curve, ComplexValue z,
                              std::uint64_t n, const PrimeTable& table,
                              BadPrimePolicy policy = BadPrimePolicy::verbatim,
                              unsigned threads = 1);
ComplexValue l_series_partial(std::span<const LocalData> locals, ComplexValue z,
                              std::uint64_t n,
                              BadPrimePolicy policy = BadPrimePolicy::verbatim);

// Product of local factors over the window of prime indices n+1..2n.
ComplexValue l_window_product(const EllipticCurve& curve, ComplexValue z,
                              std::uint64_t n, const PrimeTable& table,
                              BadPrimePolicy policy = BadPrimePolicy::verbatim,
                              unsigned threads = 1);

struct ProbeRow {
  std::uint64_t n = 0;
  ComplexValue value;   // L_n(1)
  double log_n = 0.0;
  double log_abs = 0.0;
};

struct ProbeReport {
  std::vector<ProbeRow> rows;
  double slope = 0.0;  // least squares of log|L_n(1)| against log n
  bool slope_valid = false;
  std::string commentary;
};

// Partial products at z = 1 along an ascending ladder, with the fitted
// log-log slope. The expected shrink of the products at a high-order zero is
// commentary only; the table itself is exact output.
ProbeReport vanishing_probe(const EllipticCurve& curve,
                            const std::vector<std::uint64_t>& ladder,
                            const PrimeTable& table, unsigned threads = 1);

}  // namespace zreg
