#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace corners {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for i in [0, n) over a static partition of the index range.
/// Each index owns its output slot and (by convention) its own rng stream, so
/// results do not depend on the thread count.
template <class Fn>
void parallel_for_index(std::size_t n, unsigned threads, Fn&& fn) {
  const unsigned t = resolve_threads(threads);
  if (t <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(t, n);
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  auto run_chunk = [&fn, n, workers](std::size_t w) {
    const std::size_t begin = n * w / workers;
    const std::size_t end = n * (w + 1) / workers;
    for (std::size_t i = begin; i < end; ++i) fn(i);
  };
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run_chunk, w);
  run_chunk(0);
  for (auto& th : pool) th.join();
}

}  // namespace corners
