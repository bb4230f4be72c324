#include "addtrans/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace addtrans {

int worker_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("ADDTRANS_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1) n = std::min(n, cap);
    } catch (...) {
      // Unparsable value: keep the default.
    }
  }
  return n;
}

void parallel_chunks(
    std::uint64_t begin, std::uint64_t end,
    const std::function<void(std::uint64_t, std::uint64_t)>& fn) {
  if (begin >= end) return;
  const std::uint64_t total = end - begin;
  const std::uint64_t workers =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(worker_count()),
                              total);
  if (workers <= 1) {
    fn(begin, end);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t step = total / workers;
  std::uint64_t lo = begin;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t hi = (w + 1 == workers) ? end : lo + step;
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    lo = hi;
  }
  for (auto& t : pool) t.join();
}

}  // namespace addtrans
