#pragma once

#include <map>
#include <vector>

#include "skewhook/shape.hpp"
#include "skewhook/strips.hpp"

namespace skewhook {

/// A |μ|-subset of [λ] reachable from [μ] by excited moves, together with
/// the state carried through those moves: where each cell started, the
/// deformed Kreiman paths γ_i(D), and the broken diagonals Br(D).
struct ExcitedDiagram {
  SkewShape shape;
  std::vector<Cell> cells;      // sorted
  std::map<Cell, Cell> origin;  // current cell -> cell of [μ] it came from
  std::vector<LatticePath> gammas;
  std::vector<Cell> broken;     // sorted

  bool contains(Cell c) const;
  bool is_broken(Cell c) const;
  /// Number of diagonal steps the cell at c has moved.
  int excitation(Cell c) const { return c.row - origin.at(c).row; }

  friend bool operator==(const ExcitedDiagram& a, const ExcitedDiagram& b) {
    return a.shape == b.shape && a.cells == b.cells;
  }
};

/// [μ] with the undeformed Kreiman paths. Broken diagonals are the cells of
/// [λ/μ] whose content is μ_i − i for some 1 ≤ i < ℓ(λ).
ExcitedDiagram initial_diagram(const SkewShape& s);

/// Cells (i,j) ∈ D such that (i+1,j), (i,j+1), (i+1,j+1) are in [λ] but not in D.
std::vector<Cell> active_cells(const ExcitedDiagram& d);

struct BetaResult {
  ExcitedDiagram diagram;
  int path_index;  // 1-based index of the γ path that took the ladder move
};

/// β_u: moves u to u+(1,1), shifts the broken diagonal at u+(1,1) west to
/// u+(1,0) and turns the corner of the affected path.
/// PreconditionError if u is not active.
BetaResult apply_beta_tracked(const ExcitedDiagram& d, Cell u);
ExcitedDiagram apply_beta(const ExcitedDiagram& d, Cell u);

/// β-closure of [μ], ordered lexicographically by the sorted cell list.
std::vector<ExcitedDiagram> enumerate_excited(const SkewShape& s);

/// 0-1 array on [λ] supported on Br(D).
Grid excited_array(const ExcitedDiagram& d);

/// Recomputes the carried state from scratch and throws StructuralError on
/// mismatch: paths are N/E lattice paths, pairwise disjoint, keep their
/// endpoint contents, cover [λ]∖D, and Br(D) is the set of path cells
/// followed by a north step.
void check_consistency(const ExcitedDiagram& d);

}  // namespace skewhook
