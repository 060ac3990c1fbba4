#include "whk/concurrency.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace whk {

std::size_t thread_budget() {
  static const std::size_t budget = [] {
    const char* env = std::getenv("WHK_THREADS");
    std::size_t requested = 1;
    if (env && *env) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end && *end == '\0' && v > 0) requested = static_cast<std::size_t>(v);
    }
    std::size_t hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return std::min(requested, hw);
  }();
  return budget;
}

std::size_t chunk_count(std::size_t n) {
  std::size_t t = thread_budget();
  return std::max<std::size_t>(1, std::min(t, n));
}

void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  std::size_t chunks = chunk_count(n);
  if (chunks <= 1) {
    fn(0, n, 0);
    return;
  }
  std::vector<std::thread> workers;
  std::size_t per = (n + chunks - 1) / chunks;
  for (std::size_t c = 0; c < chunks; ++c) {
    std::size_t lo = c * per;
    std::size_t hi = std::min(n, lo + per);
    if (lo >= hi) break;
    workers.emplace_back([=, &fn] { fn(lo, hi, c); });
  }
  for (auto& w : workers) w.join();
}

}  // namespace whk
