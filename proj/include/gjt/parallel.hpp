#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gjt {

/// Worker cap: the GJ_THREADS environment variable when set, otherwise the
/// hardware concurrency.
inline int worker_count() {
  if (const char* env = std::getenv("GJ_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

/// Run fn(0..count-1) across a small thread pool.  Work items must be
/// independent; callers are responsible for deterministic aggregation
/// (collect into an index-addressed buffer).  The first exception thrown by
/// any item is rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn, int workers = 0) {
  if (workers <= 0) workers = worker_count();
  if (count == 0) return;
  if (static_cast<std::size_t>(workers) > count) workers = static_cast<int>(count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      std::size_t i;
      while ((i = next.fetch_add(1)) < count) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          next.store(count);
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace gjt
