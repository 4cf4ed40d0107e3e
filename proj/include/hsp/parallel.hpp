#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hsp {

// Process-wide worker count for parallel_for. 0 restores the default
// (hardware concurrency).
void set_thread_count(unsigned n);
unsigned thread_count();

// Runs body(i) for i in [0, n). Items are handed out dynamically, so body
// must write its result to a slot owned by i; reductions then combine the
// slots in index order, which keeps results independent of the thread count.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(thread_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// Tree summation over [first, last) in index order.
template <class It, class T>
T pairwise_sum(It first, It last, T zero) {
  const auto n = static_cast<std::size_t>(last - first);
  if (n == 0) return zero;
  if (n <= 8) {
    T acc = zero;
    for (; first != last; ++first) acc = acc + *first;
    return acc;
  }
  const It mid = first + static_cast<std::ptrdiff_t>(n / 2);
  return pairwise_sum(first, mid, zero) + pairwise_sum(mid, last, zero);
}

template <class T>
T pairwise_sum(const std::vector<T>& values, T zero = T{}) {
  return pairwise_sum(values.begin(), values.end(), zero);
}

}  // namespace hsp
