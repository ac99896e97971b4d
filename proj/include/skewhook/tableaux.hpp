#pragma once

#include <functional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "skewhook/shape.hpp"
#include "skewhook/strips.hpp"

namespace skewhook {

using BigInt = boost::multiprecision::cpp_int;

/// Nonnegative filling of [λ/μ]. Stored on the full grid of λ with the
/// inner cells held at zero, so grid equality is tableau equality.
class SkewTableau {
 public:
  SkewTableau() = default;
  explicit SkewTableau(SkewShape shape);

  const SkewShape& shape() const { return shape_; }
  const Grid& grid() const { return grid_; }

  int at(Cell c) const { return grid_.at(c); }
  void set(Cell c, int value);

  /// |T|.
  long long weight() const { return grid_.total(); }
  /// Rows weakly increase, columns strictly increase, entries ≥ 0.
  bool is_semistandard() const;
  /// Row-major entries over [λ/μ]; the canonical sort key.
  std::vector<int> entries() const;

  friend bool operator==(const SkewTableau& a, const SkewTableau& b) {
    return a.shape_ == b.shape_ && a.grid_ == b.grid_;
  }
  friend bool operator<(const SkewTableau& a, const SkewTableau& b) {
    return a.entries() < b.entries();
  }

 private:
  SkewShape shape_;
  Grid grid_;
};

/// Semistandard filling of [μ] with entries 1..d.
struct MuTableau {
  Partition shape;
  Grid grid;
  friend bool operator==(const MuTableau&, const MuTableau&) = default;
};

/// Column j holds 0, 1, ..., λ'_j − μ'_j − 1 from top to bottom.
SkewTableau minimum_tableau(const SkewShape& s);

/// T − T_0.
SkewTableau excess(const SkewTableau& t);

struct DeltaMove {
  int strip;  // 1-based index into the Lascoux–Pragacz decomposition
  int col;    // absolute column
  friend auto operator<=>(const DeltaMove&, const DeltaMove&) = default;
};

/// Column segments θ_k(j) that may be incremented: the top entry is below
/// its θ_k height and the incremented tableau is still semistandard.
/// UnsupportedShape for disconnected shapes.
std::vector<DeltaMove> active_columns(const SkewTableau& t);
std::vector<DeltaMove> active_columns(const SkewTableau& t, const Decomposition& theta);

/// Adds one to every entry of θ_k(j). PreconditionError if inactive.
SkewTableau apply_delta(const SkewTableau& t, DeltaMove move);
SkewTableau apply_delta(const SkewTableau& t, DeltaMove move, const Decomposition& theta);

/// δ-closure of T_0, sorted by entry vector.
std::vector<SkewTableau> enumerate_min_via_moves(const SkewShape& s);

/// Semistandard fillings with T(i,j) ≤ ht_θ(i) on every strip cell and unit
/// steps down every strip column segment, by backtracking.
std::vector<SkewTableau> enumerate_min_via_characterization(const SkewShape& s);

/// Whether t satisfies the height and unit-step characterization.
bool is_minimal(const SkewTableau& t);
bool is_minimal(const SkewTableau& t, const Decomposition& theta);

/// Semistandard 0-based fillings with T(i,j) ≤ i − 1.
std::vector<SkewTableau> enumerate_flagged_skew(const SkewShape& s);

/// Semistandard fillings of μ with entries in 1..d and c(u) < λ_{d+1−T(u)}.
std::vector<MuTableau> enumerate_oot(const SkewShape& s);

/// Number of standard fillings by memoized removal of outer corners.
BigInt count_syt(const SkewShape& s);

/// Calls visit for every semistandard 0-based filling with |T| ≤ max_weight.
void for_each_bounded_ssyt(const SkewShape& s, int max_weight,
                           const std::function<void(const SkewTableau&)>& visit);
std::vector<SkewTableau> enumerate_bounded_ssyt(const SkewShape& s, int max_weight);

/// Column strictness forces |T_0| to be the least weight of any SSYT.
long long minimum_weight(const SkewShape& s);

}  // namespace skewhook
