#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace wlaudit::detail {

// Runs fn(i) for i in [0, n) on up to `threads` workers (strided split).
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&fn, n, w, workers] {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  }
}

}  // namespace wlaudit::detail
