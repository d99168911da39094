#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace kclique {

// Runs f(begin, end) over contiguous blocks of [0, n) on `workers`
// threads. workers <= 1 runs inline.
template <class F>
void parallel_blocks(uint64_t n, int workers, F&& f) {
  if (workers <= 1 || n == 0) {
    f(uint64_t(0), n);
    return;
  }
  uint64_t w = static_cast<uint64_t>(workers);
  uint64_t chunk = (n + w - 1) / w;
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (uint64_t i = 0; i < w; ++i) {
    uint64_t begin = i * chunk;
    uint64_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&f, begin, end] { f(begin, end); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace kclique
