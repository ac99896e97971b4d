#pragma once

#include <string>
#include <vector>

#include "skewhook/excited.hpp"
#include "skewhook/tableaux.hpp"

namespace skewhook {

/// Φ: excited diagram → minimal tableau. For each pair (γ_i(D), θ_i) and
/// each path column j counted from the west end, the bottom cell of the
/// j-th column of θ_i gets b_j (plus the entry to its left when j > 1),
/// where b_j counts broken diagonals in the j-th column of γ_i(D); the
/// rest of the column decreases by one going up.
SkewTableau phi(const ExcitedDiagram& d);

/// Number of strips θ_k whose constant excess on column j exceeds μ'_j − i,
/// for u = (i,j) ∈ [μ]. PreconditionError if t is not minimal.
int alpha(const SkewTableau& t, Cell u);

/// {(i+α, j+α) : (i,j) ∈ [μ]} with the carried state rebuilt by replaying
/// β-moves from [μ]. PreconditionError if t is not minimal.
ExcitedDiagram phi_inverse(const SkewTableau& t);

struct CommutationReport {
  struct Failure {
    std::vector<Cell> diagram;
    Cell move;
    std::string reason;
  };
  int checked = 0;
  std::vector<Failure> failures;
  bool ok() const { return failures.empty(); }
};

/// Φ(β_u(D)) = δ_{(i; μ(u))}(Φ(D)) for every diagram and active cell, where
/// i is the path taking the ladder move and μ(u) the origin column of u.
CommutationReport verify_commutation(const SkewShape& s);

}  // namespace skewhook
