#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace jacobi {

/// Calls fn(i) for i in [0, n) on up to `threads` workers. Each index is
/// visited exactly once; the first exception thrown by any worker is
/// rethrown after all workers have joined.
template <class Fn> void parallel_for(std::size_t n, unsigned threads, Fn &&fn) {
  threads = std::max(1u, threads);
  if (threads == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  const std::size_t nworkers = std::min<std::size_t>(threads, n);
  for (std::size_t w = 0; w < nworkers; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += nworkers) fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto &t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

} // namespace jacobi
