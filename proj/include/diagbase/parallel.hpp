#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace diagbase {

inline unsigned effective_threads(unsigned requested) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (requested == 0) return hw;
  return requested;
}

// Static range split. Each worker produces one R over [begin, end); results
// are merged in chunk order, so the outcome is independent of the thread
// count.
template <typename R, typename Work, typename Merge>
R parallel_chunks(std::uint64_t n, unsigned threads, Work&& work,
                  Merge&& merge, R init) {
  threads = effective_threads(threads);
  if (n == 0) return init;
  std::uint64_t nchunks = std::min<std::uint64_t>(threads, n);
  std::vector<R> results(nchunks);
  std::vector<std::thread> pool;
  for (std::uint64_t c = 0; c < nchunks; ++c) {
    std::uint64_t lo = n * c / nchunks;
    std::uint64_t hi = n * (c + 1) / nchunks;
    if (nchunks == 1) {
      results[c] = work(lo, hi);
    } else {
      pool.emplace_back([&results, c, lo, hi, &work] { results[c] = work(lo, hi); });
    }
  }
  for (auto& t : pool) t.join();
  R acc = std::move(init);
  for (auto& r : results) acc = merge(std::move(acc), std::move(r));
  return acc;
}

}  // namespace diagbase
