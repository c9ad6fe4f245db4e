#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace edgesim::detail {

// Runs fn(begin, end) over contiguous chunks of [0, count) on up to
// hardware_concurrency threads. Callers write to disjoint output slots,
// so results do not depend on scheduling.
template <typename Fn>
void parallel_chunks(std::size_t count, Fn&& fn, std::size_t min_grain = 2048) {
  std::size_t hw = std::thread::hardware_concurrency();
  std::size_t workers = hw ? hw : 1;
  if (count < min_grain || workers == 1) {
    fn(std::size_t{0}, count);
    return;
  }
  if (workers > count / min_grain) workers = count / min_grain;
  if (workers < 2) {
    fn(std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t begin = w * chunk;
    std::size_t end = std::min(begin + chunk, count);
    if (begin >= end) break;
    threads.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace edgesim::detail
