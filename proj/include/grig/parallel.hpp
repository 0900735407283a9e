#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace grig {

/// Runs fn(i) for i in [0, count) on the given number of threads, static
/// contiguous partition. Results must be written into preallocated slots by
/// index so the outcome is independent of scheduling.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  unsigned n = std::min<std::size_t>(threads, count);
  std::vector<std::thread> pool;
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) {
    std::size_t lo = count * t / n;
    std::size_t hi = count * (t + 1) / n;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace grig
