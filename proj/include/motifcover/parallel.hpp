#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace motifcover {

inline int resolve_workers(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs produce(i) for i in [0, n) on up to `workers` threads, then calls
// consume(i, result) strictly in index order. Output is therefore
// independent of the worker count.
template <class Result>
void parallel_for_ordered(std::size_t n, int workers,
                          const std::function<Result(std::size_t)>& produce,
                          const std::function<void(std::size_t, Result&)>& consume) {
  workers = resolve_workers(workers);
  if (n == 0) return;
  if (workers <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) {
      Result r = produce(i);
      consume(i, r);
    }
    return;
  }
  std::vector<Result> results(n);
  std::vector<std::thread> pool;
  std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
  for (std::size_t t = 0; t < nthreads; ++t) {
    pool.emplace_back([&, t]() {
      for (std::size_t i = t; i < n; i += nthreads) results[i] = produce(i);
    });
  }
  for (auto& th : pool) th.join();
  for (std::size_t i = 0; i < n; ++i) consume(i, results[i]);
}

}  // namespace motifcover
