#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

#include "zenowalk/analysis.hpp"

namespace zenowalk::io {

/// Calls fn(i) for every i in [0, count) on up to `workers` threads. Indices
/// are claimed dynamically; fn must write only to slot i of its output.
template <class Fn>
void parallel_for_index(std::size_t count, int workers, Fn&& fn) {
  const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
}

/// Sweep with points evaluated concurrently and assembled in canonical
/// order. A point that throws becomes a flagged row. Output is identical for
/// every worker count. Throws InvalidParameter if workers < 1.
std::vector<SweepRow> run_parallel(const SweepSpec& spec, int workers);

}  // namespace zenowalk::io
