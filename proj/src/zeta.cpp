#include "zreg/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zreg/parallel.hpp"
#include "zreg/special.hpp"

namespace zreg {

namespace {

constexpr double kPi = std::numbers::pi;
// log(3 + sqrt 8): per-term decay rate of the accelerated alternating sum.
const double kAccelRate = std::log(3.0 + std::sqrt(8.0));

// Chebyshev-coefficient acceleration of the alternating zeta series
// (Borwein's algorithm 2):
//   eta(z) ~ -(1/d_n) sum_{k=0}^{n-1} (-1)^k (d_k - d_n) (k+1)^{-z},
// error ~ (3+sqrt 8)^{-n} (1 + 2|t|) e^{pi |t| / 2}. The d_k are accumulated
// in long double so that large |t| (order n up to ~600) stays in range.
ComplexValue eta_accelerated(ComplexValue z) {
  double t = std::abs(z.imag());
  int n = static_cast<int>(
              (std::log(3.0 * (1.0 + 2.0 * t)) + kPi * t / 2.0 + std::log(1e13)) /
              kAccelRate) +
          8;
  n = std::max(n, 24);
  if (n > 600)
    throw DomainError("zeta_regularized: |Im z| too large for the accelerated series");

  std::vector<long double> d(static_cast<std::size_t>(n) + 1);
  long double term = 1.0L / n;
  long double acc = term;
  d[0] = acc * n;
  for (int i = 1; i <= n; ++i) {
    term *= 4.0L * (n + i - 1) * (n - i + 1);
    term /= static_cast<long double>(2 * i) * (2 * i - 1);
    acc += term;
    d[static_cast<std::size_t>(i)] = acc * n;
  }

  KahanSum sum;
  const long double dn = d[static_cast<std::size_t>(n)];
  for (int k = 0; k < n; ++k) {
    double coeff = static_cast<double>((d[static_cast<std::size_t>(k)] - dn) / dn);
    ComplexValue term_k = coeff * inv_cpow(k + 1.0, z);
    sum.add((k % 2 == 0) ? -term_k : term_k);
  }
  return sum.value();
}

ComplexValue window_product(ComplexValue z, std::span<const std::uint64_t> primes,
                            unsigned threads) {
  auto blocks = blocked_map<ComplexValue>(
      primes.size(), threads, [&](std::uint64_t b, std::uint64_t e) {
        ComplexValue prod = 1.0;
        for (std::uint64_t i = b; i < e; ++i) {
          ComplexValue factor = 1.0 - inv_cpow(static_cast<double>(primes[i]), z);
          if (std::abs(factor) < 1e-300)
            throw DomainError("euler product: vanishing factor at p = " +
                              std::to_string(primes[i]));
          prod /= factor;
        }
        return prod;
      });
  ComplexValue prod = 1.0;
  for (ComplexValue b : blocks) prod *= b;
  require_finite(prod, "euler product");
  return prod;
}

}  // namespace

ComplexValue zeta_partial_sum(ComplexValue z, std::uint64_t n, unsigned threads) {
  if (n == 0) throw DomainError("zeta_partial_sum: n must be positive");
  auto blocks = blocked_map<ComplexValue>(n, threads, [&](std::uint64_t b, std::uint64_t e) {
    KahanSum s;
    for (std::uint64_t k = b; k < e; ++k)
      s.add(inv_cpow(static_cast<double>(k + 1), z));
    return s.value();
  });
  KahanSum total;
  for (ComplexValue b : blocks) total.add(b);
  return total.value();
}

ComplexValue euler_product_partial(ComplexValue z, std::uint64_t n,
                                   const PrimeTable& table, unsigned threads) {
  if (n == 0) throw DomainError("euler_product_partial: n must be positive");
  if (n > table.size())
    throw TableError("euler_product_partial: table holds " +
                     std::to_string(table.size()) + " primes, need " +
                     std::to_string(n));
  return window_product(z, table.all().subspan(0, n), threads);
}

ComplexValue alternating_partial_sum(ComplexValue z, std::uint64_t n) {
  if (n == 0) throw DomainError("alternating_partial_sum: n must be positive");
  KahanSum s;
  for (std::uint64_t k = 1; k <= n; ++k) {
    ComplexValue term = inv_cpow(static_cast<double>(k), z);
    s.add((k % 2 == 1) ? term : -term);
  }
  return s.value();
}

ComplexValue zeta_regularized(ComplexValue z) {
  ComplexValue denom = 1.0 - cpow(2.0, 1.0 - z);
  if (std::abs(z - ComplexValue(1.0, 0.0)) < 1e-12)
    throw DomainError("zeta_regularized: pole at z = 1");
  if (std::abs(denom) < 1e-8)
    throw DomainError("zeta_regularized: 1 - 2^{1-z} vanishes near z = " +
                      format_complex(z));
  return eta_accelerated(z) / denom;
}

ComplexValue zeta_cutoff(ComplexValue z, std::uint64_t n, unsigned threads) {
  if (std::abs(z - ComplexValue(1.0, 0.0)) < 1e-12)
    throw DomainError("zeta_cutoff: pole at z = 1");
  return zeta_partial_sum(z, n, threads) -
         cpow(static_cast<double>(n), 1.0 - z) / (1.0 - z);
}

ComplexValue euler_window_ratio(ComplexValue z, std::uint64_t n,
                                const PrimeTable& table, unsigned threads) {
  return window_product(z, table.window(n), threads);
}

ComplexValue zeta_from_window_ratio(ComplexValue z, std::uint64_t n,
                                    const PrimeTable& table, unsigned threads) {
  if (std::abs(z - ComplexValue(1.0, 0.0)) < 1e-12)
    throw DomainError("zeta_from_window_ratio: pole at z = 1");
  ComplexValue f = euler_window_ratio(z, n, table, threads);
  if (std::abs(f - 1.0) < 1e-14)
    throw DomainError("zeta_from_window_ratio: window ratio degenerates to 1");
  ComplexValue two = cpow(2.0, 1.0 - z);
  return (f - two) / (f - 1.0) * cpow(static_cast<double>(n), 1.0 - z) / (z - 1.0);
}

ComplexValue zeta_from_partial_products(ComplexValue z, std::uint64_t n,
                                        const PrimeTable& table,
                                        unsigned threads) {
  if (std::abs(z - ComplexValue(1.0, 0.0)) < 1e-12)
    throw DomainError("zeta_from_partial_products: pole at z = 1");
  ComplexValue p2 = euler_product_partial(z, 2 * n, table, threads);
  ComplexValue p1 = euler_product_partial(z, n, table, threads);
  if (std::abs(p2 - p1) < 1e-300 * std::abs(p2))
    throw DomainError("zeta_from_partial_products: degenerate denominator");
  ComplexValue two = cpow(2.0, 1.0 - z);
  return (p2 - two * p1) / (p2 - p1) * cpow(static_cast<double>(n), 1.0 - z) /
         (z - 1.0);
}

ComplexValue window_log_sum(ComplexValue rho, std::uint64_t n, unsigned depth,
                            const PrimeTable& table, unsigned threads) {
  if (depth == 0) throw DomainError("window_log_sum: depth must be positive");
  auto window = table.window(n);
  auto blocks = blocked_map<ComplexValue>(
      window.size(), threads, [&](std::uint64_t b, std::uint64_t e) {
        KahanSum s;
        for (std::uint64_t i = b; i < e; ++i) {
          double p = static_cast<double>(window[i]);
          for (unsigned m = 1; m <= depth; ++m) {
            double mm = static_cast<double>(m);
            s.add((inv_cpow(p, mm * rho) + inv_cpow(p, mm * (1.0 - rho))) / mm);
          }
        }
        return s.value();
      });
  KahanSum total;
  for (ComplexValue b : blocks) total.add(b);
  return total.value();
}

ComplexValue sum_product_gap(ComplexValue z, std::uint64_t n,
                             const PrimeTable& table, unsigned threads) {
  return zeta_partial_sum(z, n, threads) -
         euler_product_partial(z, n, table, threads);
}

ComplexValue zeta_analytic(ComplexValue z) {
  if (z.real() >= 0.0) return zeta_regularized(z);
  // Functional equation; Re(1-z) > 1 so the series side is easy, and the
  // sine zeros of the factor reproduce the trivial zeros.
  return functional_factor(z) * zeta_regularized(1.0 - z);
}

double hardy_z(double t) {
  ComplexValue rotated = std::exp(ComplexValue(0.0, phase_theta(t))) *
                         zeta_regularized(ComplexValue(0.5, t));
  return rotated.real();
}

namespace {

double bisect_zero(double a, double b, double fa) {
  for (int iter = 0; iter < 80 && (b - a) > 1e-9; ++iter) {
    double m = 0.5 * (a + b);
    double fm = hardy_z(m);
    if (fm == 0.0) return m;
    if ((fa < 0) != (fm < 0)) {
      b = m;
    } else {
      a = m;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

ZeroScan scan_critical_zeros(double t_min, double t_max, double step) {
  if (!(0.0 < t_min && t_min < t_max))
    throw DomainError("scan_critical_zeros: need 0 < t_min < t_max");
  if (!(step > 0.0)) throw DomainError("scan_critical_zeros: step must be positive");
  if (t_max > 500.0)
    throw CapacityError("scan_critical_zeros: ordinates above 500 unsupported");

  ZeroScan out;
  double a = t_min;
  double fa = hardy_z(a);
  while (a < t_max) {
    double b = std::min(a + step, t_max);
    double m = 0.5 * (a + b);
    double fm = hardy_z(m);
    double fb = hardy_z(b);
    bool left_change = (fa < 0) != (fm < 0);
    bool right_change = (fm < 0) != (fb < 0);
    if (left_change && right_change) {
      out.warnings.push_back("two sign changes inside step at t ~ " + fmt17(m));
    }
    if (left_change) out.ordinates.push_back(bisect_zero(a, m, fa));
    if (right_change) out.ordinates.push_back(bisect_zero(m, b, fm));
    a = b;
    fa = fb;
  }
  return out;
}

}  // namespace zreg
