#include "zreg/elliptic.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "zreg/parallel.hpp"

namespace zreg {

namespace {

std::int64_t mod_i64(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

BigInt curve_discriminant(std::int64_t a1, std::int64_t a2, std::int64_t a3,
                          std::int64_t a4, std::int64_t a6) {
  BigInt b2 = BigInt(a1) * a1 + 4 * BigInt(a2);
  BigInt b4 = 2 * BigInt(a4) + BigInt(a1) * a3;
  BigInt b6 = BigInt(a3) * a3 + 4 * BigInt(a6);
  BigInt b8 = BigInt(a1) * a1 * a6 + 4 * BigInt(a2) * a6 -
              BigInt(a1) * a3 * a4 + BigInt(a2) * a3 * a3 - BigInt(a4) * a4;
  return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long long v = std::stoll(item, &pos);
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos])))
      ++pos;
    if (pos != item.size())
      throw DomainError("bad integer '" + item + "' in curve spec");
    out.push_back(v);
  }
  return out;
}

}  // namespace

EllipticCurve EllipticCurve::from_long(std::int64_t a1, std::int64_t a2,
                                       std::int64_t a3, std::int64_t a4,
                                       std::int64_t a6, std::string label) {
  EllipticCurve e;
  e.a1 = a1;
  e.a2 = a2;
  e.a3 = a3;
  e.a4 = a4;
  e.a6 = a6;
  e.discriminant = curve_discriminant(a1, a2, a3, a4, a6);
  e.label = std::move(label);
  if (e.discriminant == 0)
    throw DomainError("singular curve: discriminant vanishes");
  return e;
}

EllipticCurve EllipticCurve::from_short(std::int64_t a, std::int64_t b,
                                        std::int64_t c, std::int64_t d,
                                        std::string label) {
  return from_long(0, b, a, c, d, std::move(label));
}

EllipticCurve EllipticCurve::parse(const std::string& spec, std::string label) {
  const std::string prefix = "paper:";
  if (spec.rfind(prefix, 0) == 0) {
    auto v = parse_int_list(spec.substr(prefix.size()));
    if (v.size() != 4)
      throw DomainError("short curve spec needs 4 coefficients: '" + spec + "'");
    return from_short(v[0], v[1], v[2], v[3], std::move(label));
  }
  auto v = parse_int_list(spec);
  if (v.size() != 5)
    throw DomainError("curve spec needs 5 coefficients: '" + spec + "'");
  return from_long(v[0], v[1], v[2], v[3], v[4], std::move(label));
}

std::vector<EllipticCurve> load_curve_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open curve file '" + path + "'");
  std::vector<EllipticCurve> out;
  std::string line;
  while (std::getline(is, line)) {
    std::size_t pos = line.find_first_not_of(" \t");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ss(line);
    std::string first, second;
    ss >> first >> second;
    if (second.empty())
      out.push_back(EllipticCurve::parse(first));
    else
      out.push_back(EllipticCurve::parse(second, first));
  }
  return out;
}

LocalData count_points_enumerate(const EllipticCurve& e, std::uint64_t p) {
  std::int64_t ip = static_cast<std::int64_t>(p);
  std::int64_t a1 = mod_i64(e.a1, ip), a2 = mod_i64(e.a2, ip),
               a3 = mod_i64(e.a3, ip), a4 = mod_i64(e.a4, ip),
               a6 = mod_i64(e.a6, ip);
  std::uint64_t count = 0;
  for (std::int64_t x = 0; x < ip; ++x) {
    std::int64_t rhs = ((x * x % ip) * x % ip + a2 * x % ip * x % ip +
                        a4 * x % ip + a6) % ip;
    for (std::int64_t y = 0; y < ip; ++y) {
      std::int64_t lhs = (y * y % ip + a1 * x % ip * y % ip + a3 * y % ip) % ip;
      if (lhs == mod_i64(rhs, ip)) ++count;
    }
  }
  LocalData d;
  d.p = p;
  d.affine_points = count;
  d.a_p = static_cast<std::int64_t>(p) - static_cast<std::int64_t>(count);
  d.good_reduction = (e.discriminant % BigInt(p)) != 0;
  return d;
}

LocalData count_points_character(const EllipticCurve& e, std::uint64_t p) {
  if (p < 3 || p % 2 == 0)
    throw DomainError("count_points_character: needs an odd prime");
  std::int64_t ip = static_cast<std::int64_t>(p);
  // Complete the square: (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6;
  // each x contributes 1 + chi(g(x)) points.
  std::int64_t b2 = mod_i64(e.a1 * e.a1 + 4 * e.a2, ip);
  std::int64_t b4two = mod_i64(4 * e.a4 + 2 * e.a1 * e.a3, ip);
  std::int64_t b6 = mod_i64(e.a3 * e.a3 + 4 * e.a6, ip);

  std::vector<std::uint8_t> is_square(p, 0);
  for (std::uint64_t x = 0; x <= (p - 1) / 2; ++x)
    is_square[(x * x) % p] = 1;

  std::int64_t sum = 0;
  for (std::int64_t x = 0; x < ip; ++x) {
    std::int64_t g = (((4 * x % ip * x % ip + b2 * x % ip) % ip * x % ip) +
                      b4two * x % ip + b6) % ip;
    g = mod_i64(g, ip);
    if (g == 0) continue;
    sum += is_square[static_cast<std::uint64_t>(g)] ? 1 : -1;
  }
  LocalData d;
  d.p = p;
  d.affine_points = static_cast<std::uint64_t>(ip + sum);
  d.a_p = -sum;
  d.good_reduction = (e.discriminant % BigInt(p)) != 0;
  return d;
}

LocalData count_points(const EllipticCurve& e, std::uint64_t p) {
  if (!is_prime_u64(p)) throw DomainError("count_points: p must be prime");
  if (p > 1'000'000)
    throw CapacityError("count_points: primes above 1e6 unsupported");
  if (p <= 1000) return count_points_enumerate(e, p);
  return count_points_character(e, p);
}

std::vector<LocalData> local_data_range(const EllipticCurve& e, std::uint64_t n,
                                        const PrimeTable& table,
                                        unsigned threads) {
  if (n > table.size())
    throw TableError("local_data_range: table holds " +
                     std::to_string(table.size()) + " primes, need " +
                     std::to_string(n));
  auto primes = table.all();
  auto blocks = blocked_map<std::vector<LocalData>>(
      n, threads,
      [&](std::uint64_t b, std::uint64_t end) {
        std::vector<LocalData> out;
        out.reserve(end - b);
        for (std::uint64_t i = b; i < end; ++i)
          out.push_back(count_points(e, primes[i]));
        return out;
      },
      /*block=*/256);
  std::vector<LocalData> all;
  all.reserve(n);
  for (auto& blk : blocks)
    all.insert(all.end(), blk.begin(), blk.end());
  return all;
}

namespace {

ComplexValue local_factor(const LocalData& d, ComplexValue z,
                          BadPrimePolicy policy) {
  double p = static_cast<double>(d.p);
  ComplexValue x = inv_cpow(p, z);  // p^{-z}
  ComplexValue denom;
  if (policy == BadPrimePolicy::standard && !d.good_reduction)
    denom = 1.0 - static_cast<double>(d.a_p) * x;
  else
    denom = 1.0 - static_cast<double>(d.a_p) * x + p * x * x;
  if (std::abs(denom) < 1e-300)
    throw DomainError("l-series: vanishing local factor at p = " +
                      std::to_string(d.p));
  return 1.0 / denom;
}

}  // namespace

ComplexValue l_series_partial(std::span<const LocalData> locals, ComplexValue z,
                              std::uint64_t n, BadPrimePolicy policy) {
  if (n > locals.size())
    throw TableError("l_series_partial: insufficient local data");
  ComplexValue prod = 1.0;
  for (std::uint64_t i = 0; i < n; ++i)
    prod *= local_factor(locals[i], z, policy);
  require_finite(prod, "l-series partial product");
  return prod;
}

ComplexValue l_series_partial(const EllipticCurve& e, ComplexValue z,
                              std::uint64_t n, const PrimeTable& table,
                              BadPrimePolicy policy, unsigned threads) {
  auto locals = local_data_range(e, n, table, threads);
  return l_series_partial(locals, z, n, policy);
}

ComplexValue l_window_product(const EllipticCurve& e, ComplexValue z,
                              std::uint64_t n, const PrimeTable& table,
                              BadPrimePolicy policy, unsigned threads) {
  auto locals = local_data_range(e, 2 * n, table, threads);
  ComplexValue prod = 1.0;
  for (std::uint64_t i = n; i < 2 * n; ++i)
    prod *= local_factor(locals[i], z, policy);
  require_finite(prod, "l-series window product");
  return prod;
}

ProbeReport vanishing_probe(const EllipticCurve& e,
                            const std::vector<std::uint64_t>& ladder,
                            const PrimeTable& table, unsigned threads) {
  ProbeReport report;
  report.commentary =
      "At z = 1 a zero of order r is expected to shrink the partial products "
      "roughly like (log n)^{-r} (up to bounded oscillation), so flatter "
      "tables suggest lower vanishing order; the fit is commentary, the rows "
      "are exact.";
  if (ladder.empty()) return report;
  for (std::size_t i = 1; i < ladder.size(); ++i)
    if (ladder[i] <= ladder[i - 1])
      throw DomainError("vanishing_probe: ladder must be strictly ascending");

  auto locals = local_data_range(e, ladder.back(), table, threads);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::uint64_t n : ladder) {
    ProbeRow row;
    row.n = n;
    row.value = l_series_partial(locals, ComplexValue(1.0, 0.0), n,
                                 BadPrimePolicy::verbatim);
    row.log_n = std::log(static_cast<double>(n));
    row.log_abs = std::log(std::abs(row.value));
    sx += row.log_n;
    sy += row.log_abs;
    sxx += row.log_n * row.log_n;
    sxy += row.log_n * row.log_abs;
    report.rows.push_back(row);
  }
  double count = static_cast<double>(ladder.size());
  double denom = count * sxx - sx * sx;
  if (std::abs(denom) > 0) {
    report.slope = (count * sxy - sx * sy) / denom;
    report.slope_valid = ladder.size() >= 2;
  }
  return report;
}

}  // namespace zreg
