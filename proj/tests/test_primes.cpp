#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "zreg/primes.hpp"

using namespace zreg;
namespace fs = std::filesystem;

TEST_CASE("small sieve counts") {
  PrimeTable t = PrimeTable::sieve_to_count(1);
  REQUIRE(t.size() >= 1);
  CHECK(t.nth(1) == 2);

  PrimeTable t25 = PrimeTable::sieve_to_count(25);
  CHECK(t25.nth(25) == 97);
  CHECK(t25.nth(25) == testing::nth_prime_by_trial_division(25));
}

TEST_CASE("millionth prime") {
  const PrimeTable& t = testing::shared_primes(1'000'000);
  CHECK(t.nth(1'000'000) == 15485863);
}

TEST_CASE("windows") {
  const PrimeTable& t = testing::shared_primes(4000);
  auto w1 = t.window(1);
  REQUIRE(w1.size() == 1);
  CHECK(w1[0] == 3);
  auto w2 = t.window(2);
  REQUIRE(w2.size() == 2);
  CHECK(w2[0] == 5);
  CHECK(w2[1] == 7);
  auto w1000 = t.window(1000);
  CHECK(w1000.size() == 1000);
  CHECK(w1000.front() == t.nth(1001));
  CHECK(w1000.back() == t.nth(2000));

  PrimeTable small = PrimeTable::sieve_to_count(10);
  CHECK_THROWS_AS(small.window(small.size()), TableError);
}

TEST_CASE("capacity cap") {
  CHECK_THROWS_AS(PrimeTable::sieve_to_count(101, 100), CapacityError);
  CHECK_THROWS_AS(PrimeTable::sieve_to_count(0), DomainError);
}

TEST_CASE("sampled entries pass deterministic Miller-Rabin and trial division") {
  const PrimeTable& t = testing::shared_primes(200000);
  for (std::uint64_t k : {1ull, 2ull, 17ull, 1000ull, 31337ull, 200000ull}) {
    std::uint64_t p = t.nth(k);
    CHECK(is_prime_u64(p));
    if (p < 2'000'000) CHECK(testing::trial_division_prime(p));
  }
  // Strict monotonicity over a stretch.
  auto primes = t.all();
  for (std::size_t i = 1; i < 5000; ++i) CHECK(primes[i] > primes[i - 1]);
}

TEST_CASE("save / load round trip") {
  fs::path path = fs::temp_directory_path() / "zreg_primes_rt.bin";
  PrimeTable t = PrimeTable::sieve_to_count(100);
  t.save(path);
  PrimeTable back = PrimeTable::load(path);
  CHECK(back == t);
  fs::remove(path);
}

TEST_CASE("load rejects truncated file") {
  fs::path path = fs::temp_directory_path() / "zreg_primes_trunc.bin";
  PrimeTable t = PrimeTable::sieve_to_count(100);
  t.save(path);
  fs::resize_file(path, fs::file_size(path) - 11);
  CHECK_THROWS_AS(PrimeTable::load(path), IoError);
  fs::remove(path);
}

TEST_CASE("load rejects non-monotone data") {
  fs::path path = fs::temp_directory_path() / "zreg_primes_mono.bin";
  PrimeTable t = PrimeTable::sieve_to_count(100);
  t.save(path);
  // Swap two entries in place: header is 8 (magic) + 8 (count) + 8 (limit).
  std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
  char a[8], b[8];
  f.seekg(24);
  f.read(a, 8);
  f.read(b, 8);
  f.seekp(24);
  f.write(b, 8);
  f.write(a, 8);
  f.close();
  CHECK_THROWS_AS(PrimeTable::load(path), TableError);
  fs::remove(path);
}

TEST_CASE("load rejects wrong magic") {
  fs::path path = fs::temp_directory_path() / "zreg_primes_magic.bin";
  std::ofstream(path) << "definitely not a prime table";
  CHECK_THROWS_AS(PrimeTable::load(path), IoError);
  fs::remove(path);
}
