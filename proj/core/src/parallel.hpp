#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ciskit::detail {

/// Splits [0, total) into `jobs` contiguous slices and calls
/// fn(begin, end, slot) for each, on worker threads when jobs > 1.
/// The first exception thrown by a worker is rethrown on the caller.
template <class Fn>
void parallel_slices(unsigned jobs, std::uint64_t total, Fn&& fn) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || total < 2) {
    fn(std::uint64_t{0}, total, 0u);
    return;
  }
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, total));
  std::vector<std::thread> workers;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const std::uint64_t step = total / jobs;
  for (unsigned slot = 0; slot < jobs; ++slot) {
    const std::uint64_t begin = step * slot;
    const std::uint64_t end = slot + 1 == jobs ? total : begin + step;
    workers.emplace_back([&, begin, end, slot] {
      try {
        fn(begin, end, slot);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
      }
    });
  }
  for (auto& w : workers) {
    w.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

}  // namespace ciskit::detail
