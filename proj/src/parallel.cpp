#include "sumfree/parallel.hpp"

#include <algorithm>
#include <atomic>

namespace sumfree {

namespace {

int default_cap() {
  if (const char* env = std::getenv("SUMFREE_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::atomic<int> g_cap{0};  // 0 = not yet initialized

}  // namespace

int thread_cap() {
  int c = g_cap.load(std::memory_order_relaxed);
  if (c == 0) {
    c = default_cap();
    g_cap.store(c, std::memory_order_relaxed);
  }
  return c;
}

void set_thread_cap(int cap) { g_cap.store(std::max(1, cap), std::memory_order_relaxed); }

void parallel_for(std::int64_t begin, std::int64_t end,
                  const std::function<void(std::int64_t)>& fn) {
  const std::int64_t n = end - begin;
  if (n <= 0) return;
  const int workers = static_cast<int>(std::min<std::int64_t>(thread_cap(), n));
  if (workers <= 1 || n < 256) {
    for (std::int64_t i = begin; i < end; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  const std::int64_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t lo = begin + w * chunk;
    const std::int64_t hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] {
      for (std::int64_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace sumfree
