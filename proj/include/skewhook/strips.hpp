#pragma once

#include <string>
#include <vector>

#include "skewhook/shape.hpp"

namespace skewhook {

/// Cells ordered from the southwest end to the northeast end; consecutive
/// cells differ by a north or an east step.
using LatticePath = std::vector<Cell>;

enum class StripKind { Theta, Gamma };

std::string to_string(StripKind kind);

struct BorderStrip {
  StripKind kind = StripKind::Theta;
  int index = 1;    // 1-based position in its decomposition
  int epsilon = 0;  // peel distance from the first strip
  LatticePath cells;

  Cell start() const { return cells.front(); }
  Cell end() const { return cells.back(); }
  /// Row of the topmost (= northeast end) cell.
  int top_row() const { return cells.back().row; }
  bool contains(Cell c) const;
  /// Distinct columns west to east.
  std::vector<int> columns() const;
};

struct Decomposition {
  SkewShape shape;
  StripKind kind = StripKind::Theta;
  std::vector<BorderStrip> strips;

  /// Strip index (1-based) owning the cell, or 0.
  int strip_of(Cell c) const;
};

/// Lascoux–Pragacz decomposition: on every diagonal the j-th cell counted
/// from the outer (southeast) end lies in a strip with ε = j−1. Cells with
/// the same ε and consecutive contents form one strip.
Decomposition lascoux_pragacz(const SkewShape& s);

/// Kreiman decomposition: same construction with ranks counted from the
/// inner (northwest) end, so γ_1 hugs μ.
Decomposition kreiman(const SkewShape& s);

/// ht_θ(row) = row − top_row(θ). DomainError for rows above the strip top.
int theta_height(const BorderStrip& strip, int row);

/// Maximal vertical run of the strip in absolute column col, top to bottom.
/// DomainError when the strip has no cell there.
std::vector<Cell> column_segment(const BorderStrip& strip, int col);

struct GammaThetaReport {
  struct Failure {
    int index;
    int epsilon;
    Cell gamma_start;
    Cell theta_start;
  };
  std::vector<Failure> failures;
  int checked = 0;
  bool ok() const { return failures.empty(); }
};

/// Checks g_i − t_i = ε_i and f_i − s_i = ε_i for every strip pair.
GammaThetaReport verify_gamma_theta(const SkewShape& s);

}  // namespace skewhook
