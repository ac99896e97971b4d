#pragma once

#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "skewhook/excited.hpp"
#include "skewhook/qseries.hpp"
#include "skewhook/shape.hpp"
#include "skewhook/tableaux.hpp"

namespace skewhook {

using BigRational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);
/// ∏ h(u) over [λ].
BigInt hook_product(const Partition& p);

/// n! / ∏ h. StructuralError if the division is not exact.
BigInt f_hlf(const Partition& p);

/// n! Σ_{D} ∏_{u ∈ [λ]∖D} 1/h(u).
BigInt f_nhlf(const SkewShape& s);

/// n!/∏_{[λ]} h · Σ_{T ∈ OOT} ∏_{(i,j) ∈ [μ]} (λ_{d+1−T(i,j)} + i − j).
/// StructuralError on a non-positive factor.
BigInt f_oof(const SkewShape& s);

/// n!/∏_{[λ]} h · Σ_{T minimal} ∏_{(i,j) ∈ [μ]} h(i+α, j+α).
/// UnsupportedShape for disconnected shapes.
BigInt f_minimal(const SkewShape& s);

/// The sums before multiplication by n!/∏h, kept for tests and reports.
BigRational nhlf_sum(const SkewShape& s);
BigInt oof_sum(const SkewShape& s);
BigInt minimal_sum(const SkewShape& s);

struct TermCounts {
  long long excited = 0;
  long long oot = 0;
  bool slim = false;
};

/// The same cells with trailing rows of λ that lie inside μ removed.
SkewShape drop_covered_rows(const SkewShape& s);

/// λ_d ≥ μ_r + d − r, with d = ℓ(λ), r = max{i ≤ d : μ_i = μ_1} and μ
/// padded with zeros to length d, evaluated after drop_covered_rows.
bool is_slim(const SkewShape& s);

/// ED, OOT and the slim flag. UnsupportedShape for disconnected shapes.
TermCounts term_counts(const SkewShape& s);

/// ∏_{u ∈ [μ]} (d + c(u)) / h_μ(u) on drop_covered_rows(s). PreconditionError
/// unless slim and connected.
BigInt hook_content_count(const SkewShape& s);

/// b(λ) = Σ (i−1) λ_i.
int staircase_exponent(const Partition& p);

/// q^{b(λ)} ∏_{u ∈ [λ]} 1/(1 − q^{h(u)}).
QPolynomial littlewood_q(const Partition& p, int degree);

/// Σ_D ∏_{(i,j) ∈ [λ]∖D} q^{λ'_j − i} / (1 − q^{h(i,j)}).
QPolynomial qnhlf_rhs(const SkewShape& s, int degree);

/// Σ q^{|T|} over 0-based SSYT of shape λ/μ with |T| ≤ degree.
QPolynomial skew_schur_q_lhs(const SkewShape& s, int degree);

/// (Σ_{T minimal} q^{|T|}, Σ_D q^{Σ_{(i,j) ∈ [λ]∖D} (λ'_j − i)}), both exact.
std::pair<QPolynomial, QPolynomial> leading_terms(const SkewShape& s);

/// Σ_D q^{hook weight of A_D}, exact.
QPolynomial excited_array_weights(const SkewShape& s);

/// The formulas exactly as they are usually printed, kept so tests can show
/// where they disagree with the oracles.
namespace printed {

/// f_oof with factor λ_{d+1−T(i,j)} − i + j.
BigRational f_oof(const SkewShape& s);
/// qnhlf with the product over (i,j) ∈ D.
QPolynomial qnhlf_rhs(const SkewShape& s, int degree);
/// Right side of leading_terms with the exponent summed over D.
QPolynomial leading_terms_rhs(const SkewShape& s);
/// The slim inequality on λ/μ as given, without drop_covered_rows.
bool is_slim(const SkewShape& s);
/// s_μ(1^{d−r}) by the hook-content formula.
BigInt hook_content_count(const SkewShape& s);

}  // namespace printed

}  // namespace skewhook
