#include "zreg/primes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <fstream>

namespace zreg {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Sieve bound guaranteeing at least n primes: p_n < n (ln n + ln ln n) for
// n >= 6 (Rosser); small n handled by a floor.
std::uint64_t nth_prime_bound(std::uint64_t n) {
  if (n < 6) return 16;
  double x = static_cast<double>(n);
  double b = x * (std::log(x) + std::log(std::log(x)));
  return static_cast<std::uint64_t>(b) + 16;
}

void append_sieved(std::uint64_t lo, std::uint64_t hi,
                   const std::vector<std::uint64_t>& base,
                   std::vector<std::uint64_t>* out) {
  // Marks composites in [lo, hi) against the base primes.
  std::vector<std::uint8_t> composite(hi - lo, 0);
  for (std::uint64_t p : base) {
    if (p * p >= hi) break;
    std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
    for (std::uint64_t m = start; m < hi; m += p) composite[m - lo] = 1;
  }
  for (std::uint64_t v = lo; v < hi; ++v)
    if (!composite[v - lo] && v >= 2) out->push_back(v);
}

constexpr char kMagic[8] = {'Z', 'R', 'E', 'G', 'P', 'T', '0', '1'};

void put_u64le(std::ostream& os, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  os.write(b, 8);
}

std::uint64_t get_u64le(std::istream& is) {
  char b[8];
  is.read(b, 8);
  if (is.gcount() != 8) throw IoError("prime table file truncated");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i)
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(b[i])) << (8 * i);
  return v;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

PrimeTable PrimeTable::sieve_to_count(std::uint64_t n, std::uint64_t cap) {
  if (n == 0) throw DomainError("sieve_to_count: n must be positive");
  if (n > cap)
    throw CapacityError("sieve_to_count: " + std::to_string(n) +
                        " primes exceeds cap " + std::to_string(cap));

  std::uint64_t bound = nth_prime_bound(n);
  PrimeTable t;
  for (;;) {
    t.primes_.clear();
    t.primes_.reserve(n + n / 8 + 64);

    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(bound))) + 2;
    std::vector<std::uint8_t> small(root + 1, 1);
    std::vector<std::uint64_t> base;
    for (std::uint64_t i = 2; i <= root; ++i) {
      if (!small[i]) continue;
      base.push_back(i);
      for (std::uint64_t m = i * i; m <= root; m += i) small[m] = 0;
    }

    constexpr std::uint64_t kSegment = 1u << 20;
    for (std::uint64_t lo = 2; lo < bound; lo += kSegment) {
      std::uint64_t hi = std::min(bound, lo + kSegment);
      append_sieved(lo, hi, base, &t.primes_);
      if (t.primes_.size() >= n) break;
    }
    if (t.primes_.size() >= n) {
      t.limit_ = bound;
      return t;
    }
    bound += bound / 4 + 64;  // estimate was short; extend and redo
  }
}

void PrimeTable::save(const std::filesystem::path& path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open '" + path.string() + "' for writing");
  os.write(kMagic, 8);
  put_u64le(os, primes_.size());
  put_u64le(os, limit_);
  for (std::uint64_t p : primes_) put_u64le(os, p);
  if (!os) throw IoError("short write to '" + path.string() + "'");
}

PrimeTable PrimeTable::load(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open '" + path.string() + "'");
  char magic[8];
  is.read(magic, 8);
  if (is.gcount() != 8 || std::memcmp(magic, kMagic, 8) != 0)
    throw IoError("'" + path.string() + "' is not a prime table file");
  PrimeTable t;
  std::uint64_t count = get_u64le(is);
  t.limit_ = get_u64le(is);
  t.primes_.resize(count);
  for (std::uint64_t i = 0; i < count; ++i) t.primes_[i] = get_u64le(is);

  if (count > 0 && t.primes_[0] != 2)
    throw TableError("prime table does not start at 2");
  for (std::uint64_t i = 1; i < count; ++i)
    if (t.primes_[i] <= t.primes_[i - 1])
      throw TableError("prime table entries not strictly increasing at index " +
                       std::to_string(i));
  return t;
}

}  // namespace zreg
