#include "hpzero/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace hpzero {

void parallel_for_items(const std::vector<int>& items, int workers,
                        const std::function<void(int)>& task) {
  if (items.empty()) return;
  unsigned n = workers > 0 ? static_cast<unsigned>(workers)
                           : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, items.size());
  if (n <= 1) {
    for (int item : items) task(item);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= items.size()) return;
      {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (first_error) return;
      }
      try {
        task(items[idx]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(n);
  for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace hpzero
