#include "vw/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace vw {

long thread_budget() {
  long hw = static_cast<long>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("VW_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) return std::min(cap, hw);
  }
  return hw;
}

void parallel_for(long n, const std::function<void(long)>& fn) {
  if (n <= 0) return;
  long workers = std::min(thread_budget(), n);
  if (workers <= 1) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (long w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (long i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace vw
