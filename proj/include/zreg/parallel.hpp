#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace zreg {

inline constexpr std::uint64_t kParallelBlock = 4096;

// Partitions [0, count) into fixed-size blocks and evaluates
// per_block(begin, end) -> R, possibly on several threads. The partition and
// the order of the returned results depend only on count and block, never on
// the thread count, so a caller folding the vector sequentially gets results
// that are bit-identical for any --threads value.
template <class R, class Fn>
std::vector<R> blocked_map(std::uint64_t count, unsigned threads, Fn&& per_block,
                           std::uint64_t block = kParallelBlock) {
  std::uint64_t nblocks = count == 0 ? 0 : (count + block - 1) / block;
  std::vector<R> out(nblocks);
  if (nblocks == 0) return out;
  unsigned nt = static_cast<unsigned>(
      std::min<std::uint64_t>(threads == 0 ? 1 : threads, nblocks));
  if (nt <= 1) {
    for (std::uint64_t b = 0; b < nblocks; ++b)
      out[b] = per_block(b * block, std::min(count, (b + 1) * block));
    return out;
  }
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::uint64_t b = next.fetch_add(1);
      if (b >= nblocks) return;
      out[b] = per_block(b * block, std::min(count, (b + 1) * block));
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (unsigned i = 0; i < nt; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace zreg
