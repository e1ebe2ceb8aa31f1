#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

// Internal. Static partition over worker threads; every item writes its own
// output slot and each per-item computation is a sequential sum, so results
// are byte-identical for any thread count.

namespace fraccalc::detail {

inline int thread_count() {
  if (const char* env = std::getenv("FRACCALC_THREADS")) {
    int k = std::atoi(env);
    if (k >= 1)
      return k;
  }
  return 1;
}

inline void parallel_for(int n_items, const std::function<void(int)>& body) {
  int k = thread_count();
  if (k <= 1 || n_items < 64) {
    for (int i = 0; i < n_items; ++i)
      body(i);
    return;
  }
  if (k > n_items)
    k = n_items;
  std::vector<std::thread> pool;
  pool.reserve(k);
  for (int w = 0; w < k; ++w) {
    int lo = (long long)n_items * w / k;
    int hi = (long long)n_items * (w + 1) / k;
    pool.emplace_back([lo, hi, &body] {
      for (int i = lo; i < hi; ++i)
        body(i);
    });
  }
  for (auto& t : pool)
    t.join();
}

} // namespace fraccalc::detail
