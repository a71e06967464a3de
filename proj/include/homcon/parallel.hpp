#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace homcon {

// Global worker budget for internally parallel loops. 0 = hardware default.
void set_thread_budget(int n);
int thread_budget();

// Runs fn(i) for i in [0, count). Tasks must write only to disjoint slots;
// iteration order is unspecified but the set of calls is exactly [0, count).
template <typename F>
void parallel_for(std::size_t count, F&& fn) {
  int budget = thread_budget();
  if (budget <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::size_t nthreads = std::min<std::size_t>(budget, count);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace homcon
