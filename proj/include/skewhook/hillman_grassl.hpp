#pragma once

#include <string>
#include <vector>

#include "skewhook/excited.hpp"
#include "skewhook/shape.hpp"
#include "skewhook/tableaux.hpp"

namespace skewhook {

/// Reverse plane partition of shape λ: weakly increasing along rows and columns.
struct RppLambda {
  Grid values;

  bool is_valid() const;
  long long size() const { return values.total(); }
  friend bool operator==(const RppLambda&, const RppLambda&) = default;
};

/// Nonnegative array on [λ], graded by hook weight Σ A_u h(u).
struct WeightArray {
  Grid values;

  long long hook_weight() const;
  friend bool operator==(const WeightArray&, const WeightArray&) = default;
};

/// Hillman–Grassl: repeatedly strip the NE path that starts at the
/// southwest-most nonzero cell (smallest column, then largest row), moving
/// north on equal values and east otherwise. Each path records one unit at
/// (end row, start column). PreconditionError on non-RPP input.
WeightArray hg_forward(const RppLambda& p);

/// Same as hg_forward, also returning the extracted units in order.
WeightArray hg_forward(const RppLambda& p, std::vector<Cell>* trace);

/// Inverse: units are replayed column descending, row ascending within a
/// column. Each starts at the east end of its row and walks south on equal
/// values and west otherwise, never west of its column, adding one to
/// every cell it visits.
RppLambda hg_inverse(const WeightArray& a);

/// Skew tableau viewed on [λ] with zeros on [μ].
RppLambda embed(const SkewTableau& t);

/// True if p is zero on [μ] and semistandard on [λ/μ].
bool is_embedded_ssyt(const RppLambda& p, const SkewShape& s);

/// The unique D ∈ 𝓔(λ/μ) with supp(a) ⊆ [λ]∖D and a > 0 on Br(D).
/// StructuralError when no diagram or several diagrams match.
ExcitedDiagram classify_restricted(const WeightArray& a, const SkewShape& s);

/// λ with θ_1, ..., θ_{i−1} removed. StructuralError if not a partition.
Partition peeled_partition(const SkewShape& s, int i);

/// RPP on the peeled partition carrying t's entries on θ_i and zeros elsewhere.
RppLambda strip_restriction(const SkewTableau& t, int i);

struct HgReport {
  struct Failure {
    std::string case_id;
    std::string expected;
    std::string actual;
  };
  int checked = 0;
  std::vector<Failure> failures;
  bool ok() const { return failures.empty(); }
};

/// hg_inverse(A_D) = embed(Φ(D)) for every excited diagram.
HgReport verify_phi_vs_hg(const SkewShape& s);

/// For every minimal T with D = Φ⁻¹(T):
///  (a) HG(T_θi) is the 0-1 array of Br(D) ∩ γ_i(D), translated by
///      (−ε_i, −ε_i) into the coordinates of the peeled partition;
///  (b) translating each HG(T_θi) back by (+ε_i, +ε_i) and summing gives HG(T).
HgReport verify_additivity(const SkewShape& s);

std::string to_string(const Grid& g);

}  // namespace skewhook
