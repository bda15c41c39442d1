#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace metdim {

inline unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

/// Runs fn(0) .. fn(count-1) on up to `jobs` threads pulling indices from a
/// shared counter. Callers write results into per-index slots, so output
/// order never depends on scheduling. The first exception is rethrown.
template <class F>
void parallel_for(std::size_t count, unsigned jobs, F&& fn) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const auto workers = std::min<std::size_t>(jobs, count);
    for (std::size_t j = 0; j < workers; ++j) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace metdim
