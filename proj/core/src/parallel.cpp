#include "cograte/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cograte::parallel {
namespace {

std::atomic<int> g_default_threads{0};

int resolve(int threads) {
  if (threads <= 0) threads = g_default_threads.load();
  if (threads <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    threads = hw > 0 ? static_cast<int>(hw) : 1;
  }
  return threads;
}

}  // namespace

int default_threads() { return resolve(0); }

void set_default_threads(int threads) { g_default_threads.store(threads); }

void for_each_index(std::int64_t n, const std::function<void(std::int64_t)>& fn,
                    int threads) {
  if (n <= 0) return;
  const int workers = static_cast<int>(std::min<std::int64_t>(resolve(threads), n));
  if (workers <= 1) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }

  std::atomic<std::int64_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::int64_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace cograte::parallel
