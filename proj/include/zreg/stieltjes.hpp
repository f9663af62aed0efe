#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "zreg/complexval.hpp"

namespace zreg {

// Ascending positive ordinates of critical-line zeros, from a text file or a
// fresh scan. Text format: one decimal ordinate per line, '#' comments, an
// optional "# start-index: k" directive (default 1; a table starting at the
// first zero must begin within 1e-3 of 14.134725).
class ZeroTable {
 public:
  enum class Source { file, scan };

  static ZeroTable from_ordinates(std::vector<double> ordinates, Source source,
                                  unsigned start_index = 1);
  static ZeroTable load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  const std::vector<double>& ordinates() const { return ordinates_; }
  std::size_t size() const { return ordinates_.size(); }
  Source source() const { return source_; }
  unsigned start_index() const { return start_index_; }

 private:
  std::vector<double> ordinates_;
  Source source_ = Source::file;
  unsigned start_index_ = 1;
};

// Laurent coefficients of zeta about z = 1 together with the cutoff used to
// produce them.
struct StieltjesSet {
  std::vector<double> gammas;
  std::uint64_t m_cutoff = 0;
  int correction_orders = 2;
  std::vector<std::string> notes;
  nlohmann::json to_json() const;
};

// Coefficient gamma_n from the limit expression
//   sum_{k<=m} (log k)^n / k - (log m)^{n+1} / (n+1)
// plus the first two Euler-Maclaurin corrections (-f(m)/2 - f'(m)/12 with
// f(x) = (log x)^n / x), which make 1e-8 reachable already at m = 1e6.
// n <= 8.
double stieltjes_constant(unsigned n, std::uint64_t m);

StieltjesSet stieltjes_set(unsigned n_max, std::uint64_t m);

struct ZeroSumResult {
  double raw = 0.0;   // pairwise-conjugate sum over the table
  double tail = 0.0;  // smooth-density tail estimate past the last ordinate
  double total() const { return raw + tail; }
};

// Power sum over nontrivial zeros,
//   Z(n) = sum_j [(1/2 + i l_j)^{-n} + (1/2 - i l_j)^{-n}]
//        = sum_j 2 Re (1/2 + i l_j)^{-n},
// truncated at the table plus a tail from the smooth zero-counting density
// (1/2pi) log(l/2pi) integrated from the last ordinate. Raw sum and tail are
// reported separately.
ZeroSumResult zero_power_sum(unsigned n, const ZeroTable& table);

// Closed forms in the Stieltjes constants:
//   Z(1) = (2 + g0 - log 4pi)/2
//   Z(2) = 1 + g0^2 - pi^2/8 + 2 g1
//   Z(3) = 1 + g0^3 + 3 g0 g1 + (3/2) g2 - (7/8) zeta(3).
// n in 1..3; gammas must hold gamma_0..gamma_{n-1}.
double zero_sum_closed_form(unsigned n, const StieltjesSet& gammas);

// Inversion of the closed forms: gamma_0 from Z(1), then gamma_1 from Z(2)
// (with the +pi^2/8 sign fixed numerically by gamma_1 ~ -0.0728158455), then
// gamma_2 from Z(3).
StieltjesSet stieltjes_from_zero_sums(const std::vector<double>& z_values);

}  // namespace zreg
