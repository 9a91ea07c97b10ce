#pragma once

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace usv {

inline unsigned default_jobs() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads. Chunks are
// contiguous so callers can merge per-chunk results in index order.
inline void parallel_for(std::size_t count, unsigned jobs,
                         const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  std::size_t chunk = (count + jobs - 1) / jobs;
  for (unsigned t = 0; t < jobs; ++t) {
    std::size_t lo = t * chunk;
    std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& w : workers) w.join();
}

}  // namespace usv
