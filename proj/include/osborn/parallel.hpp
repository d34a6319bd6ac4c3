#ifndef OSBORN_PARALLEL_HPP
#define OSBORN_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace osborn {

/// Runs `task(i)` for i in [0, count) on up to `jobs` threads.  Tasks write
/// into caller-owned slots indexed by i, so merged output does not depend on
/// the worker count.  The first exception thrown by a task is rethrown.
template <typename Task>
void parallel_for(std::size_t count, unsigned jobs, Task&& task) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t n_threads = std::min<std::size_t>(jobs, count);
  for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace osborn

#endif  // OSBORN_PARALLEL_HPP
