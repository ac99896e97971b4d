#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "skewhook/shape.hpp"

namespace skewhook::oracle {

/// Linear extensions of the cell poset of λ/μ, counted by a DP over the
/// set of cells already filled. Shares no code with the library.
inline std::uint64_t brute_syt(const SkewShape& s) {
  auto cells = s.cells();
  const std::size_t n = cells.size();
  std::vector<std::uint32_t> below(n, 0);  // cells that must be filled first
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && cells[b].row <= cells[a].row && cells[b].col <= cells[a].col)
        below[a] |= 1u << b;
  std::vector<std::uint64_t> ways(std::size_t{1} << n, 0);
  ways[0] = 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!ways[mask]) continue;
    for (std::size_t a = 0; a < n; ++a)
      if (!(mask >> a & 1) && (below[a] & mask) == below[a]) ways[mask | (1u << a)] += ways[mask];
  }
  return ways.back();
}

/// Uniform-ish random partition of n by random splitting.
inline Partition random_partition(int n, std::mt19937& rng) {
  std::vector<int> parts;
  while (n > 0) {
    int p = std::uniform_int_distribution<int>(1, n)(rng);
    parts.push_back(p);
    n -= p;
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

}  // namespace skewhook::oracle
