#include "skewhook/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace skewhook {

namespace {

void partitions_rec(int left, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (left == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = 1; p <= std::min(left, max_part); ++p) {
    cur.push_back(p);
    partitions_rec(left - p, p, cur, out);
    cur.pop_back();
  }
}

void subs_rec(const Partition& outer, int row, int max_part, std::vector<int>& cur,
              std::vector<Partition>& out) {
  out.emplace_back(cur);
  if (row > outer.length()) return;
  for (int p = 1; p <= std::min(max_part, outer.part(row)); ++p) {
    cur.push_back(p);
    subs_rec(outer, row + 1, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (n >= 0) partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Partition> sub_partitions(const Partition& outer) {
  std::vector<Partition> out;
  std::vector<int> cur;
  subs_rec(outer, 1, outer.part(1), cur, out);
  return out;
}

std::vector<SkewShape> sweep_shapes(const SweepOptions& opts) {
  std::vector<SkewShape> out;
  for (int n = 1; n <= opts.max_size; ++n)
    for (const auto& lambda : partitions_of(n)) {
      if (opts.straight_only) {
        out.emplace_back(lambda);
        continue;
      }
      for (const auto& mu : sub_partitions(lambda)) {
        if (mu == lambda) continue;
        SkewShape s(lambda, mu);
        if (opts.connected_only && !s.is_connected()) continue;
        out.push_back(std::move(s));
      }
    }
  return out;
}

unsigned worker_count() {
  if (const char* env = std::getenv("SKEWHOOK_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = n;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace skewhook
