#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skewhook {

/// A box of a Young diagram in matrix coordinates. Rows grow downward and
/// both coordinates start at 1.
struct Cell {
  int row = 1;
  int col = 1;

  constexpr int content() const { return col - row; }
  constexpr Cell shifted(int diag) const { return {row + diag, col + diag}; }

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

std::ostream& operator<<(std::ostream& os, const Cell& c);

/// Weakly decreasing sequence of positive integers. Immutable.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; anything else that is not weakly
  /// decreasing and positive throws DomainError.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Parses "5,5,3,3,2". The empty string is the empty partition.
  static Partition parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  /// lambda_i with 1-based i; zero past the last part.
  int part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  bool contains(Cell c) const { return c.row >= 1 && c.col >= 1 && c.col <= part(c.row); }
  /// Containment of diagrams, [other] inside [*this].
  bool contains(const Partition& other) const;

  Partition conjugate() const;

  /// Hook length λ_i − i + λ'_j − j + 1. Throws DomainError outside [λ].
  int hook(Cell c) const;

  /// Row-major cells of [λ].
  std::vector<Cell> cells() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// λ/μ with μ ⊆ λ.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner);
  explicit SkewShape(Partition outer) : SkewShape(std::move(outer), Partition{}) {}

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }

  /// d = ℓ(λ).
  int rows() const { return outer_.length(); }
  /// |λ| − |μ|.
  int size() const { return outer_.size() - inner_.size(); }
  bool empty() const { return size() == 0; }

  bool contains(Cell c) const { return outer_.contains(c) && !inner_.contains(c); }

  /// Row-major cells of [λ/μ].
  std::vector<Cell> cells() const;

  /// Edge-connectivity of [λ/μ]. The empty shape counts as connected.
  bool is_connected() const;

  /// (content, number of cells) for every content present, content descending.
  std::vector<std::pair<int, int>> diagonal_lengths() const;

  /// Number of cells of [λ/μ] in column j (λ'_j − μ'_j).
  int column_height(int col) const;

  std::string to_string() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

std::ostream& operator<<(std::ostream& os, const SkewShape& s);

/// Product of all hook lengths of [λ], as a multiset-friendly list.
std::vector<int> hook_lengths(const Partition& p);

/// Values indexed by the cells of [λ]; the storage for tableaux,
/// reverse plane partitions, and Hillman–Grassl arrays.
class Grid {
 public:
  Grid() = default;
  explicit Grid(const Partition& outer, int fill = 0);

  const Partition& outer() const { return outer_; }

  int at(Cell c) const { return rows_[idx(c.row)][idx(c.col)]; }
  int& at(Cell c) { return rows_[idx(c.row)][idx(c.col)]; }
  /// at(c) if c ∈ [λ], otherwise the fallback.
  int value_or(Cell c, int fallback) const { return outer_.contains(c) ? at(c) : fallback; }

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  long long total() const;
  bool all_zero() const;
  /// Cells carrying a nonzero value, row-major.
  std::vector<Cell> support() const;

  friend bool operator==(const Grid&, const Grid&) = default;
  friend auto operator<=>(const Grid& a, const Grid& b) { return a.rows_ <=> b.rows_; }

 private:
  static std::size_t idx(int i) { return static_cast<std::size_t>(i - 1); }

  Partition outer_;
  std::vector<std::vector<int>> rows_;
};

}  // namespace skewhook
