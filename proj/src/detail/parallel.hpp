#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace hgrig::detail {

// Runs fn(i) for i in [0, count) on up to `threads` workers; results land in
// caller-owned slots, so the outcome never depends on scheduling.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn, std::size_t serial_below = 256) {
  if (threads <= 1 || count < serial_below) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([=, &fn] {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace hgrig::detail
