#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "skewhook/shape.hpp"

namespace skewhook {

/// Partitions of n in lexicographic order of their part lists.
std::vector<Partition> partitions_of(int n);

/// Every μ ⊆ λ in lexicographic order, from ∅ up to λ itself.
std::vector<Partition> sub_partitions(const Partition& outer);

struct SweepOptions {
  int max_size = 0;             // outer shapes of size 1..max_size
  bool connected_only = false;
  bool straight_only = false;   // inner shape empty
};

/// Outer shapes by size then lex, proper inner shapes by lex. Shapes with
/// μ = λ are left out.
std::vector<SkewShape> sweep_shapes(const SweepOptions& opts);

/// SKEWHOOK_THREADS if set to a positive integer, otherwise the hardware
/// concurrency (at least 1).
unsigned worker_count();

/// Runs fn(0..n-1) on up to worker_count() threads. Each index runs exactly
/// once; callers write results by index so the output order never depends
/// on scheduling. The first exception thrown is rethrown after all workers
/// stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& fn) {
  std::vector<T> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace skewhook
