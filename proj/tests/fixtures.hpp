#pragma once

#include <cstdlib>
#include <filesystem>
#include <mutex>

#include "zreg/primes.hpp"
#include "zreg/stieltjes.hpp"
#include "zreg/zeta.hpp"

namespace zreg::testing {

// Shared prime table, grown on demand so each binary sieves at most once.
inline const PrimeTable& shared_primes(std::uint64_t at_least) {
  static std::mutex mu;
  static PrimeTable table;
  std::lock_guard<std::mutex> lock(mu);
  if (table.size() < at_least)
    table = PrimeTable::sieve_to_count(at_least + at_least / 4);
  return table;
}

// First 100 ordinates, scanned once per process (and cached to disk under
// the build tree so other binaries reuse them).
inline const ZeroTable& shared_zero_table() {
  static std::once_flag once;
  static ZeroTable table;
  std::call_once(once, [] {
    std::filesystem::path cache =
        std::filesystem::temp_directory_path() / "zreg_zeros100.txt";
    if (const char* dir = std::getenv("ZREG_TEST_WORKDIR"))
      cache = std::filesystem::path(dir) / "zeros100.txt";
    if (std::filesystem::exists(cache)) {
      table = ZeroTable::load(cache);
      if (table.size() >= 100) return;
    }
    ZeroScan scan = scan_critical_zeros(10.0, 243.0, 0.05);
    std::vector<double> first100(scan.ordinates.begin(),
                                 scan.ordinates.begin() + 100);
    table = ZeroTable::from_ordinates(std::move(first100),
                                      ZeroTable::Source::scan, 1);
    table.save(cache);
  });
  return table;
}

}  // namespace zreg::testing
