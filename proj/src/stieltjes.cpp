#include "zreg/stieltjes.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "zreg/quadrature.hpp"
#include "zreg/zeta.hpp"

namespace zreg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFirstOrdinate = 14.134725;

}  // namespace

ZeroTable ZeroTable::from_ordinates(std::vector<double> ordinates,
                                    Source source, unsigned start_index) {
  ZeroTable t;
  t.ordinates_ = std::move(ordinates);
  t.source_ = source;
  t.start_index_ = start_index;
  for (std::size_t j = 0; j < t.ordinates_.size(); ++j) {
    if (!(t.ordinates_[j] > 0.0))
      throw TableError("zero table: ordinates must be positive");
    if (j > 0 && t.ordinates_[j] <= t.ordinates_[j - 1])
      throw TableError("zero table: ordinates must be strictly increasing");
  }
  if (start_index == 1 && !t.ordinates_.empty() &&
      std::abs(t.ordinates_[0] - kFirstOrdinate) > 1e-3)
    throw TableError("zero table claims to start at j = 1 but first entry is " +
                     fmt17(t.ordinates_[0]));
  return t;
}

ZeroTable ZeroTable::load(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open zero table '" + path.string() + "'");
  std::vector<double> ordinates;
  unsigned start_index = 1;
  std::string line;
  while (std::getline(is, line)) {
    std::size_t pos = line.find_first_not_of(" \t");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') {
      if (auto at = line.find("start-index:"); at != std::string::npos)
        start_index = static_cast<unsigned>(
            std::strtoul(line.c_str() + at + 12, nullptr, 10));
      continue;
    }
    char* end = nullptr;
    double v = std::strtod(line.c_str() + pos, &end);
    if (end == line.c_str() + pos)
      throw IoError("zero table '" + path.string() + "': bad line '" + line + "'");
    ordinates.push_back(v);
  }
  return from_ordinates(std::move(ordinates), Source::file, start_index);
}

void ZeroTable::save(const std::filesystem::path& path) const {
  std::ofstream os(path);
  if (!os) throw IoError("cannot write zero table '" + path.string() + "'");
  os << "# critical-line zero ordinates\n";
  os << "# start-index: " << start_index_ << "\n";
  for (double v : ordinates_) os << fmt17(v) << "\n";
  if (!os) throw IoError("short write to '" + path.string() + "'");
}

double stieltjes_constant(unsigned n, std::uint64_t m) {
  if (n > 8) throw DomainError("stieltjes_constant: n capped at 8");
  if (m < 10) throw DomainError("stieltjes_constant: cutoff m too small");
  KahanSum sum;
  for (std::uint64_t k = 1; k <= m; ++k) {
    double lk = std::log(static_cast<double>(k));
    double p = 1.0;
    for (unsigned j = 0; j < n; ++j) p *= lk;
    sum.add(p / static_cast<double>(k));
  }
  double lm = std::log(static_cast<double>(m));
  double lm_n = 1.0;
  for (unsigned j = 0; j < n; ++j) lm_n *= lm;
  double md = static_cast<double>(m);
  double integral = lm_n * lm / (n + 1.0);
  double f_m = lm_n / md;
  double fp_m = (n * (n == 0 ? 0.0 : lm_n / lm) - lm_n) / (md * md);
  return sum.real() - integral - 0.5 * f_m - fp_m / 12.0;
}

StieltjesSet stieltjes_set(unsigned n_max, std::uint64_t m) {
  StieltjesSet out;
  out.m_cutoff = m;
  out.correction_orders = 2;
  for (unsigned n = 0; n <= n_max; ++n)
    out.gammas.push_back(stieltjes_constant(n, m));
  return out;
}

nlohmann::json StieltjesSet::to_json() const {
  nlohmann::json j;
  auto g = nlohmann::json::array();
  for (double v : gammas) g.push_back(fmt17(v));
  j["gammas"] = std::move(g);
  j["m_cutoff"] = m_cutoff;
  j["correction_orders"] = correction_orders;
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

ZeroSumResult zero_power_sum(unsigned n, const ZeroTable& table) {
  if (n == 0) throw DomainError("zero_power_sum: n must be positive");
  if (table.size() == 0) throw TableError("zero_power_sum: empty zero table");

  auto term = [n](double lambda) {
    return 2.0 * std::real(std::pow(ComplexValue(0.5, lambda),
                                    -static_cast<double>(n)));
  };

  ZeroSumResult out;
  KahanSum raw;
  for (double lambda : table.ordinates()) raw.add(ComplexValue(term(lambda), 0));
  out.raw = raw.real();

  // Tail: integrate term * density over (last ordinate, infinity) with the
  // first-order density (1/2pi) log(l / 2pi), mapped to (0, 1] by l = L/u.
  double last = table.ordinates().back();
  out.tail = integrate_tanh_sinh_real(
      [&](double u) {
        double lambda = last / u;
        double density = std::log(lambda / (2.0 * kPi)) / (2.0 * kPi);
        return term(lambda) * density * last / (u * u);
      },
      1.0, 1e-12);
  return out;
}

double zero_sum_closed_form(unsigned n, const StieltjesSet& set) {
  if (n == 0 || n > 3)
    throw DomainError("zero_sum_closed_form: only n = 1..3 supported");
  if (set.gammas.size() < n)
    throw DomainError("zero_sum_closed_form: need gamma_0..gamma_" +
                      std::to_string(n - 1));
  double g0 = set.gammas[0];
  switch (n) {
    case 1:
      return 0.5 * (2.0 + g0 - std::log(4.0 * kPi));
    case 2:
      return 1.0 + g0 * g0 - kPi * kPi / 8.0 + 2.0 * set.gammas[1];
    default: {
      double zeta3 = zeta_regularized(ComplexValue(3.0, 0.0)).real();
      return 1.0 + g0 * g0 * g0 + 3.0 * g0 * set.gammas[1] +
             1.5 * set.gammas[2] - 0.875 * zeta3;
    }
  }
}

StieltjesSet stieltjes_from_zero_sums(const std::vector<double>& z_values) {
  if (z_values.empty())
    throw DomainError("stieltjes_from_zero_sums: need at least Z(1)");
  StieltjesSet out;
  out.m_cutoff = 0;
  out.correction_orders = 0;
  out.notes.push_back(
      "gamma_1 inversion uses (Z(2) - 1 - gamma^2 + pi^2/8)/2: the +pi^2/8 "
      "sign matches the Z(2) closed form and the numerical value "
      "gamma_1 ~ -0.0728158455; the sign printed with the inversion formula "
      "is a misprint.");
  double g0 = 2.0 * z_values[0] - 2.0 + std::log(4.0 * kPi);
  out.gammas.push_back(g0);
  if (z_values.size() >= 2) {
    double g1 = 0.5 * (z_values[1] - 1.0 - g0 * g0 + kPi * kPi / 8.0);
    out.gammas.push_back(g1);
  }
  if (z_values.size() >= 3) {
    double zeta3 = zeta_regularized(ComplexValue(3.0, 0.0)).real();
    double g2 = (2.0 / 3.0) * (z_values[2] - 1.0 - g0 * g0 * g0 -
                               3.0 * g0 * out.gammas[1] + 0.875 * zeta3);
    out.gammas.push_back(g2);
  }
  return out;
}

}  // namespace zreg
