#include "zreg/char_identity.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "zreg/bernoulli.hpp"
#include "zreg/primes.hpp"

namespace zreg {

namespace {

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = r * a % m;
    a = a * a % m;
    e >>= 1;
  }
  return r;
}

}  // namespace

IdentityReport verify_character_identity(std::uint64_t p) {
  if (!is_prime_u64(p)) throw DomainError("verify_character_identity: p must be prime");
  if (p % 4 != 3)
    throw DomainError("verify_character_identity: requires p = 3 (mod 4), got " +
                      std::to_string(p));
  if (p > 200)
    throw CapacityError("verify_character_identity: p capped at 200");

  DirichletCharacter psi = DirichletCharacter::quadratic(p);

  // Roots of unity 1 - w^a, w = e^{2 pi i / p}.
  std::vector<ComplexValue> denom_factor(p);
  for (std::uint64_t a = 0; a < p; ++a) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(a) /
                   static_cast<double>(p);
    denom_factor[a] = 1.0 - ComplexValue(std::cos(angle), std::sin(angle));
  }

  IdentityReport report;
  report.p = p;
  KahanSum lhs;
  std::uint64_t count = 0;
  // ab + bc + ca = 0 with a, b, c nonzero: c = -ab (a+b)^{-1}, defined and
  // automatically nonzero whenever a + b != 0.
  for (std::uint64_t a = 1; a < p; ++a) {
    for (std::uint64_t b = 1; b < p; ++b) {
      if ((a + b) % p == 0) continue;
      std::uint64_t inv = powmod_u64((a + b) % p, p - 2, p);
      std::uint64_t c = (p - (a * b % p)) % p * inv % p;
      ++count;
      int sign = psi.exact_value(a * b % p * c % p);
      ComplexValue term =
          static_cast<double>(sign) /
          (denom_factor[a] * denom_factor[b] * denom_factor[c]);
      lhs.add(term);
    }
  }
  report.lhs = lhs.value();
  report.triple_count = count;

  BigRational b1 = generalized_bernoulli_exact(psi, 1);
  BigRational b3 = generalized_bernoulli_exact(psi, 3);
  BigRational combo = BigRational(p + 1, 4) * b1 + BigRational(1, 6) * b3;
  report.rhs_displayed = -std::sqrt(static_cast<double>(p)) * to_double(combo);
  report.rhs = ComplexValue(0.0, report.rhs_displayed);
  report.abs_diff = std::abs(report.lhs - report.rhs);
  report.abs_diff_displayed =
      std::abs(report.lhs - ComplexValue(report.rhs_displayed, 0.0));
  return report;
}

std::uint64_t triple_set_size(std::uint64_t p) {
  if (p < 3 || !is_prime_u64(p))
    throw DomainError("triple_set_size: p must be a prime >= 3");
  std::uint64_t closed = (p - 1) * (p - 2);
  if (p <= 50) {
    std::uint64_t count = 0;
    for (std::uint64_t a = 1; a < p; ++a)
      for (std::uint64_t b = 1; b < p; ++b)
        for (std::uint64_t c = 1; c < p; ++c)
          if ((a * b + b * c + c * a) % p == 0) ++count;
    if (count != closed)
      throw TableError("triple_set_size: enumeration found " +
                       std::to_string(count) + " triples, closed form gives " +
                       std::to_string(closed));
  }
  return closed;
}

}  // namespace zreg
