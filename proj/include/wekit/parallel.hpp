#pragma once

// Batch helper for embarrassingly parallel loops. Worker count is capped by
// the WE_KIT_THREADS environment variable; results must be written to
// preallocated per-index slots so the outcome is independent of scheduling.

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace wekit {

inline int worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  int n = hw == 0 ? 1 : static_cast<int>(hw);
  if (const char* env = std::getenv("WE_KIT_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, cap);
  }
  return std::max(1, n);
}

/// Runs body(i) for i in [0, count) across workers; deterministic as long as
/// body(i) only writes to its own slot.
inline void parallel_for(int count, const std::function<void(int)>& body) {
  const int workers = std::min(worker_count(), std::max(1, count));
  if (workers == 1 || count < 2) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = w; i < count; i += workers) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace wekit
