#ifndef GGM_PARALLEL_HPP
#define GGM_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ggm {

/// Number of worker threads to use for a request of `threads` (0 = all cores).
inline int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Run f(task) for task = 0..count-1 on up to `threads` workers. Tasks are
/// claimed from a shared atomic counter; callers must make tasks independent
/// (all our uses write to disjoint output cells, so results do not depend on
/// the schedule). The first exception thrown by any task is rethrown.
template <class F>
void parallel_for(std::size_t count, int threads, F&& f) {
  const int workers =
      static_cast<int>(std::min<std::size_t>(resolve_threads(threads), count));
  if (workers <= 1) {
    for (std::size_t t = 0; t < count; ++t) f(t);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1, std::memory_order_relaxed);
      if (t >= count) return;
      try {
        f(t);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace ggm

#endif  // GGM_PARALLEL_HPP
