#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zreg/complexval.hpp"
#include "zreg/primes.hpp"

namespace zreg {

// Partial sum over the first n primes, sum_{k<=n} p_k^{-z}, ascending,
// compensated.
ComplexValue prime_zeta_partial(ComplexValue z, std::uint64_t n,
                                const PrimeTable& table, unsigned threads = 1);

// The subtracted integral int_1^n dt / (t log t)^z, evaluated after the
// substitution u = log t as int_0^{log n} u^{-z} e^{(1-z)u} du with
// double-exponential quadrature (the u^{-z} endpoint is integrable for
// Re z < 1). Exposed separately so the quadrature can be checked on its own.
ComplexValue prime_zeta_integral(ComplexValue z, std::uint64_t n);

// Regularized prime zeta value P_n(z) - int_1^n dt/(t log t)^z for the
// strip 0 < Re z < 1; DomainError outside the strip or for n < 2.
ComplexValue prime_zeta_regularized(ComplexValue z, std::uint64_t n,
                                    const PrimeTable& table,
                                    unsigned threads = 1);

struct InclusionExclusionResult {
  ComplexValue value;
  // Upper bound on the mass of the dropped correction terms (products above
  // the cap or with more factors than depth).
  double dropped_bound = 0.0;
  int terms_used = 0;
  std::vector<std::string> flags;
};

// Prime inclusion-exclusion inversion of log zeta:
//   P(z) = log zeta(z) - sum 1/p_i log zeta(p_i z)
//                      + sum 1/(p_i p_j) log zeta(p_i p_j z) - ...
// over squarefree products of distinct primes among the first M, at most
// `depth` factors, product capped at product_cap; terms are accumulated in
// increasing product order. log zeta goes through the regularized series, so
// the formula can be probed slightly below Re z = 1 (the q = 1 term is
// flagged whenever Re z <= 1). Requires Re z > 1/2 so every correction term
// has Re(qz) > 1.
InclusionExclusionResult prime_zeta_inclusion_exclusion(
    ComplexValue z, unsigned M, unsigned depth,
    std::uint64_t product_cap = 200);

struct RemainderResult {
  ComplexValue value;
  double tail_bound = 0.0;  // 2^{-depth Re z}
};

// Remainder linking P to log zeta: sum_{m=2..depth} P(mz)/m with each P
// taken as a partial sum over n_primes primes. depth = 1 gives 0.
RemainderResult log_zeta_remainder(ComplexValue z, unsigned depth,
                                   const PrimeTable& table,
                                   std::uint64_t n_primes = 20000,
                                   unsigned threads = 1);

struct SpecialValueRow {
  std::string label;
  ComplexValue z;
  ComplexValue claimed;
  ComplexValue computed;
  std::string note;
};

// Claimed-vs-computed table for P(0) = 0, P(-1) = -log 2, P(-3) = -log 4,
// computed through log(-zeta(z) / b(1-z)) with b taken as the finite
// binomial-Bernoulli partial sum (exact at these integer arguments once
// series_terms >= 4). Agreement is reported, never asserted.
std::vector<SpecialValueRow> prime_zeta_special_values(unsigned series_terms = 16);

}  // namespace zreg
