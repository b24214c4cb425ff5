#ifndef CSR_PARALLEL_HPP
#define CSR_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace csr {

inline unsigned default_workers() { return std::max(1U, std::thread::hardware_concurrency()); }

// Runs f(i) for i in [0, count) on up to `workers` threads. Indices are
// handed out dynamically; callers write results into per-index slots so the
// outcome does not depend on scheduling. The first exception is rethrown.
template <class F>
void parallel_for(std::size_t count, unsigned workers, F&& f) {
  workers = std::max(1U, workers);
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto body = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        f(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::jthread> pool;
  const auto n = static_cast<std::size_t>(workers) < count ? workers : static_cast<unsigned>(count);
  for (unsigned w = 0; w < n; ++w) pool.emplace_back(body);
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace csr

#endif  // CSR_PARALLEL_HPP
