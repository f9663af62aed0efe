#include "zreg/prime_zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zreg/bernoulli.hpp"
#include "zreg/parallel.hpp"
#include "zreg/quadrature.hpp"
#include "zreg/zeta.hpp"

namespace zreg {

ComplexValue prime_zeta_partial(ComplexValue z, std::uint64_t n,
                                const PrimeTable& table, unsigned threads) {
  if (n == 0) throw DomainError("prime_zeta_partial: n must be positive");
  if (n > table.size())
    throw TableError("prime_zeta_partial: table holds " +
                     std::to_string(table.size()) + " primes, need " +
                     std::to_string(n));
  auto primes = table.all();
  auto blocks = blocked_map<ComplexValue>(n, threads, [&](std::uint64_t b, std::uint64_t e) {
    KahanSum s;
    for (std::uint64_t i = b; i < e; ++i)
      s.add(inv_cpow(static_cast<double>(primes[i]), z));
    return s.value();
  });
  KahanSum total;
  for (ComplexValue b : blocks) total.add(b);
  return total.value();
}

ComplexValue prime_zeta_integral(ComplexValue z, std::uint64_t n) {
  if (n < 2) throw DomainError("prime_zeta_integral: n must be at least 2");
  double length = std::log(static_cast<double>(n));
  return integrate_tanh_sinh(
      [z](double u) { return inv_cpow(u, z) * std::exp((1.0 - z) * u); },
      length, 1e-11);
}

ComplexValue prime_zeta_regularized(ComplexValue z, std::uint64_t n,
                                    const PrimeTable& table, unsigned threads) {
  if (!(z.real() > 0.0 && z.real() < 1.0))
    throw DomainError("prime_zeta_regularized: requires 0 < Re z < 1");
  if (n < 2) throw DomainError("prime_zeta_regularized: n must be at least 2");
  return prime_zeta_partial(z, n, table, threads) - prime_zeta_integral(z, n);
}

namespace {

struct Subset {
  std::uint64_t product;
  unsigned size;
};

// Squarefree products of distinct primes among the first M, at most `depth`
// factors, product <= cap.
void enumerate_subsets(const std::vector<std::uint64_t>& primes, unsigned depth,
                       std::uint64_t cap, std::size_t start,
                       std::uint64_t product, unsigned size,
                       std::vector<Subset>* out) {
  for (std::size_t i = start; i < primes.size(); ++i) {
    if (product > cap / primes[i]) break;  // primes ascending: all later too big
    std::uint64_t q = product * primes[i];
    out->push_back({q, size + 1});
    if (size + 1 < depth)
      enumerate_subsets(primes, depth, cap, i + 1, q, size + 1, out);
  }
}

}  // namespace

InclusionExclusionResult prime_zeta_inclusion_exclusion(ComplexValue z,
                                                        unsigned M,
                                                        unsigned depth,
                                                        std::uint64_t cap) {
  if (!(z.real() > 0.5))
    throw DomainError("prime_zeta_inclusion_exclusion: requires Re z > 1/2");
  if (M > 25)
    throw CapacityError("prime_zeta_inclusion_exclusion: M capped at 25");

  InclusionExclusionResult out;
  out.value = std::log(zeta_regularized(z));
  out.terms_used = 1;
  if (z.real() <= 1.0)
    out.flags.push_back("log zeta argument inside the strip at q = 1");

  if (M == 0 || depth == 0) return out;

  PrimeTable small = PrimeTable::sieve_to_count(M);
  std::vector<std::uint64_t> primes(small.all().begin(),
                                    small.all().begin() + M);
  std::vector<Subset> subsets;
  enumerate_subsets(primes, depth, cap, 0, 1, 0, &subsets);
  std::sort(subsets.begin(), subsets.end(),
            [](const Subset& a, const Subset& b) { return a.product < b.product; });

  KahanSum corrections;
  for (const Subset& s : subsets) {
    double q = static_cast<double>(s.product);
    ComplexValue term = std::log(zeta_regularized(q * z)) / q;
    corrections.add((s.size % 2 == 1) ? -term : term);
    ++out.terms_used;
  }
  out.value += corrections.value();

  // Coarse bound on everything dropped: at most 2^M subsets, each with
  // product above the cap (or above the primorial of depth+1 factors), and
  // |log zeta(s)| <= 2 * 2^{-Re s} for Re s >= 2.
  double sigma = z.real();
  double scale = std::pow(2.0, static_cast<double>(M));
  double bound = scale * 2.0 * std::pow(2.0, -static_cast<double>(cap) * sigma) /
                 static_cast<double>(cap);
  if (depth < M) {
    double primorial = 1.0;
    for (unsigned i = 0; i <= depth && i < primes.size(); ++i)
      primorial *= static_cast<double>(primes[i]);
    bound += scale * 2.0 * std::pow(2.0, -primorial * sigma) / primorial;
  }
  out.dropped_bound = bound;
  return out;
}

RemainderResult log_zeta_remainder(ComplexValue z, unsigned depth,
                                   const PrimeTable& table,
                                   std::uint64_t n_primes, unsigned threads) {
  if (!(z.real() > 0.5))
    throw DomainError("log_zeta_remainder: requires Re z > 1/2");
  RemainderResult out;
  out.tail_bound = std::pow(2.0, -static_cast<double>(depth) * z.real());
  KahanSum s;
  for (unsigned m = 2; m <= depth; ++m) {
    double mm = static_cast<double>(m);
    s.add(prime_zeta_partial(mm * z, n_primes, table, threads) / mm);
  }
  out.value = s.value();
  return out;
}

std::vector<SpecialValueRow> prime_zeta_special_values(unsigned series_terms) {
  const double log2 = std::log(2.0);
  struct Probe {
    const char* label;
    double z;
    double claimed;
  };
  const Probe probes[] = {
      {"P(0)", 0.0, 0.0},
      {"P(-1)", -1.0, -log2},
      {"P(-3)", -3.0, -2.0 * log2},
  };
  std::vector<SpecialValueRow> rows;
  for (const Probe& probe : probes) {
    SpecialValueRow row;
    row.label = probe.label;
    row.z = probe.z;
    row.claimed = probe.claimed;
    ComplexValue zeta_at = zeta_analytic(probe.z);
    ComplexValue b_at = bernoulli_series_partial(1.0 - row.z, series_terms);
    row.note = "series cutoff " + std::to_string(series_terms) +
               " (exact at this argument)";
    if (std::abs(b_at) < 1e-14) {
      row.computed = ComplexValue(
          std::numeric_limits<double>::quiet_NaN(), 0.0);
      row.note = "divergent: b(1-z) vanishes";
    } else {
      row.computed = std::log(-zeta_at / b_at);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace zreg
