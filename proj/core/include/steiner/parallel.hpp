#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace steiner {

/// Worker pool size: STEINER_DEGREE_THREADS when set, else the hardware
/// concurrency. Trials write into index-addressed slots, so results do not
/// depend on the pool size or scheduling.
inline int worker_count() {
  if (const char* env = std::getenv("STEINER_DEGREE_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

inline void parallel_for(int count, const std::function<void(int)>& fn) {
  const int workers = std::min(worker_count(), count > 0 ? count : 1);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      for (int i = t; i < count; i += workers) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace steiner
