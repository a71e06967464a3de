#include "homcon/parallel.hpp"

namespace homcon {

namespace {
std::atomic<int> g_budget{0};
}

void set_thread_budget(int n) { g_budget.store(n < 0 ? 0 : n); }

int thread_budget() {
  int b = g_budget.load();
  if (b > 0) return b;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

}  // namespace homcon
