#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace lpsq {

// Runs fn(chunk_index, begin, end) on up to `threads` workers over a fixed
// contiguous partition of [0, n). The partition depends only on n and the
// worker count, so reductions that combine per-chunk results in chunk order
// are bitwise reproducible on a given machine.
inline void parallel_chunks(std::size_t n, unsigned threads,
                            const std::function<void(unsigned, std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  unsigned t = threads == 0 ? std::thread::hardware_concurrency() : threads;
  if (t == 0) t = 1;
  if (static_cast<std::size_t>(t) > n) t = static_cast<unsigned>(n);
  if (t == 1) {
    fn(0, 0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(t);
  const std::size_t base = n / t, rem = n % t;
  std::size_t begin = 0;
  for (unsigned c = 0; c < t; ++c) {
    const std::size_t len = base + (c < rem ? 1 : 0);
    pool.emplace_back(fn, c, begin, begin + len);
    begin += len;
  }
  for (auto& th : pool) th.join();
}

inline unsigned worker_count(std::size_t n, unsigned threads) {
  unsigned t = threads == 0 ? std::thread::hardware_concurrency() : threads;
  if (t == 0) t = 1;
  if (static_cast<std::size_t>(t) > n) t = static_cast<unsigned>(n == 0 ? 1 : n);
  return t;
}

}  // namespace lpsq
