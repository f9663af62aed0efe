#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "zreg/errors.hpp"

namespace zreg {

// Deterministic Miller-Rabin, valid for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

// Immutable ordered prime list, 1-based indexing (nth(1) == 2). Built by a
// segmented sieve; safely shared across threads once constructed.
class PrimeTable {
 public:
  // Table holding at least the first n primes. The sieve bound comes from
  // the p_n upper estimate n (log n + log log n) and is extended if short.
  static PrimeTable sieve_to_count(std::uint64_t n,
                                   std::uint64_t cap = 100'000'000);

  static PrimeTable load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  std::uint64_t nth(std::uint64_t k) const {
    if (k == 0 || k > primes_.size())
      throw TableError("prime table: index " + std::to_string(k) +
                       " outside 1.." + std::to_string(primes_.size()));
    return primes_[k - 1];
  }

  // Primes with 1-based indices n+1 .. 2n: the product/sum window used by
  // every ratio diagnostic.
  std::span<const std::uint64_t> window(std::uint64_t n) const {
    if (2 * n > primes_.size())
      throw TableError("prime table: window " + std::to_string(n) +
                       " needs " + std::to_string(2 * n) + " primes, have " +
                       std::to_string(primes_.size()));
    return std::span<const std::uint64_t>(primes_).subspan(n, n);
  }

  std::span<const std::uint64_t> all() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  std::uint64_t sieve_limit() const { return limit_; }

  bool operator==(const PrimeTable&) const = default;

 private:
  std::vector<std::uint64_t> primes_;
  std::uint64_t limit_ = 0;
};

}  // namespace zreg
