#pragma once

#include <atomic>
#include <cmath>
#include <cstddef>
#include <thread>
#include <vector>

namespace zetacode {

// Welford accumulator. merge() keeps exact equivalence with sequential add
// streams only in exact arithmetic; we always fold chunks in index order so
// results do not depend on thread count.
struct RunningStats {
  std::size_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }

  void merge(const RunningStats& o) {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    double d = o.mean - mean;
    std::size_t total = n + o.n;
    mean += d * static_cast<double>(o.n) / static_cast<double>(total);
    m2 += o.m2 + d * d * static_cast<double>(n) * static_cast<double>(o.n) / static_cast<double>(total);
    n = total;
  }

  double variance() const { return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0; }
  double stderr_mean() const { return n > 1 ? std::sqrt(variance() / static_cast<double>(n)) : 0.0; }
};

inline unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

constexpr std::size_t kChunkSize = 1024;

// Runs fn(chunk_index, begin, end) over [0, total) split into fixed chunks.
// The returned per-chunk results are in chunk order regardless of how many
// threads executed them, so any fold over them is reproducible.
template <class Result, class Fn>
std::vector<Result> run_chunked(std::size_t total, unsigned threads, Fn fn, std::size_t chunk = kChunkSize) {
  std::size_t nchunks = total == 0 ? 0 : (total + chunk - 1) / chunk;
  std::vector<Result> results(nchunks);
  if (nchunks == 0) return results;
  unsigned workers = resolve_threads(threads);
  if (workers > nchunks) workers = static_cast<unsigned>(nchunks);
  if (workers <= 1) {
    for (std::size_t i = 0; i < nchunks; ++i) {
      std::size_t b = i * chunk;
      std::size_t e = std::min(total, b + chunk);
      results[i] = fn(i, b, e);
    }
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= nchunks) break;
      std::size_t b = i * chunk;
      std::size_t e = std::min(total, b + chunk);
      results[i] = fn(i, b, e);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace zetacode
