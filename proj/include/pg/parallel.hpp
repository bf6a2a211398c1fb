#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace pg {

inline unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

// Splits [0, total) into contiguous chunks and runs body(begin, end, worker)
// on `threads` workers. Falls back to a plain loop for one worker or small
// ranges. body must be thread-safe for worker >= 1.
inline void parallel_ranges(std::uint64_t total, unsigned threads,
                            const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& body) {
  threads = resolve_threads(threads);
  if (threads <= 1 || total < 2048) {
    body(0, total, 0);
    return;
  }
  const std::uint64_t chunk = (total + threads - 1) / threads;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t begin = std::min<std::uint64_t>(total, t * chunk);
    const std::uint64_t end = std::min<std::uint64_t>(total, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end, t] { body(begin, end, t); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace pg
