#include "btl/util.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace btl {

int worker_threads() {
  int hw = int(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("BTL_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) hw = std::min(hw, cap);
  }
  return hw;
}

void parallel_chunks(int64_t total, const std::function<void(int64_t, int64_t)>& fn) {
  int workers = std::min<int64_t>(worker_threads(), std::max<int64_t>(total, 1));
  if (workers <= 1 || total < 2) {
    fn(0, total);
    return;
  }
  std::vector<std::thread> pool;
  int64_t chunk = (total + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    int64_t lo = w * chunk;
    int64_t hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(fn, lo, hi);
  }
  for (auto& t : pool) t.join();
}

}  // namespace btl
