#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace wpoly {

// Runs fn(block, begin, end) over a partition of [0, count) into contiguous
// blocks, one per worker thread. Block boundaries depend only on count and
// threads, so callers that merge per-block results in block order stay
// deterministic for any thread count.
inline void parallel_blocks(
    std::uint64_t count, int threads,
    const std::function<void(int, std::uint64_t, std::uint64_t)>& fn) {
  int t = threads < 1 ? 1 : threads;
  if (static_cast<std::uint64_t>(t) > count) t = count ? static_cast<int>(count) : 1;
  if (t == 1) {
    fn(0, 0, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(t);
  const std::uint64_t chunk = count / t;
  const std::uint64_t rem = count % t;
  std::uint64_t begin = 0;
  for (int b = 0; b < t; ++b) {
    const std::uint64_t len = chunk + (static_cast<std::uint64_t>(b) < rem ? 1 : 0);
    pool.emplace_back(fn, b, begin, begin + len);
    begin += len;
  }
  for (auto& th : pool) th.join();
}

}  // namespace wpoly
