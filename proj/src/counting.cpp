#include "skewhook/counting.hpp"

#include <algorithm>
#include <set>

#include "skewhook/errors.hpp"
#include "skewhook/hillman_grassl.hpp"
#include "skewhook/phi.hpp"

namespace skewhook {

namespace {

BigInt exact_integer(const BigRational& r, const char* what) {
  if (denominator(r) != 1)
    throw StructuralError(std::string(what) + " produced the non-integer " + r.str());
  return numerator(r);
}

// n!/∏_{[λ]} h as a rational; every product formula shares it.
BigRational prefactor(const SkewShape& s) {
  return BigRational(factorial(s.size()), hook_product(s.outer()));
}

// λ'_j − i summed over [λ] minus the cells of D, or over D only.
int diagram_exponent(const ExcitedDiagram& d, bool complement) {
  const auto& outer = d.shape.outer();
  const auto heights = outer.conjugate();
  int e = 0;
  for (Cell c : outer.cells())
    if (d.contains(c) != complement) e += heights.part(c.col) - c.row;
  return e;
}

QPolynomial qnhlf_sum(const SkewShape& s, int degree, bool complement) {
  const auto& outer = s.outer();
  const auto heights = outer.conjugate();
  QPolynomial total(degree);
  for (const auto& d : enumerate_excited(s)) {
    int shift = 0;
    QPolynomial term = QPolynomial::one(degree);
    for (Cell c : outer.cells()) {
      if (d.contains(c) != complement) {
        shift += heights.part(c.col) - c.row;
        term *= QPolynomial::geometric(degree, outer.hook(c));
      }
    }
    if (shift <= degree) total += term.shifted(shift);
  }
  return total;
}

// Exponents collected exactly; the polynomial is sized to the largest one.
QPolynomial from_exponents(const std::vector<long long>& exps) {
  long long top = exps.empty() ? 0 : *std::max_element(exps.begin(), exps.end());
  QPolynomial p(static_cast<int>(top));
  for (long long e : exps) p[static_cast<int>(e)] += 1;
  return p;
}

}  // namespace

BigInt factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

BigInt hook_product(const Partition& p) {
  BigInt r = 1;
  for (int h : hook_lengths(p)) r *= h;
  return r;
}

BigInt f_hlf(const Partition& p) {
  return exact_integer(BigRational(factorial(p.size()), hook_product(p)), "f_hlf");
}

BigRational nhlf_sum(const SkewShape& s) {
  const auto& outer = s.outer();
  BigRational total = 0;
  for (const auto& d : enumerate_excited(s)) {
    BigInt denom = 1;
    for (Cell c : outer.cells())
      if (!d.contains(c)) denom *= outer.hook(c);
    total += BigRational(1, denom);
  }
  return total;
}

BigInt f_nhlf(const SkewShape& s) {
  return exact_integer(BigRational(factorial(s.size())) * nhlf_sum(s), "f_nhlf");
}

BigInt oof_sum(const SkewShape& s) {
  const auto& outer = s.outer();
  const int d = s.rows();
  BigInt total = 0;
  for (const auto& t : enumerate_oot(s)) {
    BigInt term = 1;
    for (Cell c : t.shape.cells()) {
      int factor = outer.part(d + 1 - t.grid.at(c)) + c.row - c.col;
      if (factor <= 0)
        throw StructuralError("non-positive factor in the tableau sum of " + s.to_string());
      term *= factor;
    }
    total += term;
  }
  return total;
}

BigInt f_oof(const SkewShape& s) {
  return exact_integer(prefactor(s) * BigRational(oof_sum(s)), "f_oof");
}

BigInt minimal_sum(const SkewShape& s) {
  if (!s.is_connected())
    throw UnsupportedShape("f_minimal needs a connected shape, got " + s.to_string());
  const auto& outer = s.outer();
  BigInt total = 0;
  for (const auto& t : enumerate_min_via_moves(s)) {
    BigInt term = 1;
    for (Cell u : s.inner().cells()) term *= outer.hook(u.shifted(alpha(t, u)));
    total += term;
  }
  return total;
}

BigInt f_minimal(const SkewShape& s) {
  return exact_integer(prefactor(s) * BigRational(minimal_sum(s)), "f_minimal");
}

SkewShape drop_covered_rows(const SkewShape& s) {
  std::vector<int> outer(s.outer().parts().begin(), s.outer().parts().end());
  std::vector<int> inner(outer.size(), 0);
  for (std::size_t i = 0; i < outer.size(); ++i) inner[i] = s.inner().part(static_cast<int>(i) + 1);
  while (!outer.empty() && outer.back() == inner.back()) {
    outer.pop_back();
    inner.pop_back();
  }
  return SkewShape(Partition(outer), Partition(inner));
}

namespace {

bool slim_inequality(const SkewShape& s) {
  const int d = s.rows();
  if (d == 0) return true;
  const auto& mu = s.inner();
  int r = 1;
  while (r < d && mu.part(r + 1) == mu.part(1)) ++r;
  return s.outer().part(d) >= mu.part(r) + d - r;
}

}  // namespace

bool is_slim(const SkewShape& s) { return slim_inequality(drop_covered_rows(s)); }

TermCounts term_counts(const SkewShape& s) {
  if (!s.is_connected())
    throw UnsupportedShape("term_counts needs a connected shape, got " + s.to_string());
  TermCounts tc;
  tc.excited = static_cast<long long>(enumerate_excited(s).size());
  tc.oot = static_cast<long long>(enumerate_oot(s).size());
  tc.slim = is_slim(s);
  return tc;
}

namespace {

BigRational hook_content(const Partition& mu, int m) {
  BigRational r = 1;
  for (Cell c : mu.cells()) r *= BigRational(m + c.content(), mu.hook(c));
  return r;
}

}  // namespace

BigInt hook_content_count(const SkewShape& s) {
  if (!s.is_connected() || !is_slim(s))
    throw PreconditionError("hook_content_count needs a slim connected shape, got " +
                            s.to_string());
  SkewShape t = drop_covered_rows(s);
  return exact_integer(hook_content(t.inner(), t.rows()), "hook_content_count");
}

int staircase_exponent(const Partition& p) {
  int b = 0;
  for (int i = 1; i <= p.length(); ++i) b += (i - 1) * p.part(i);
  return b;
}

QPolynomial littlewood_q(const Partition& p, int degree) {
  QPolynomial r = QPolynomial::one(degree);
  for (Cell c : p.cells()) r *= QPolynomial::geometric(degree, p.hook(c));
  int b = staircase_exponent(p);
  return b <= degree ? r.shifted(b) : QPolynomial::zero(degree);
}

QPolynomial qnhlf_rhs(const SkewShape& s, int degree) { return qnhlf_sum(s, degree, true); }

QPolynomial skew_schur_q_lhs(const SkewShape& s, int degree) {
  QPolynomial r(degree);
  for_each_bounded_ssyt(s, degree, [&](const SkewTableau& t) { r[static_cast<int>(t.weight())] += 1; });
  return r;
}

std::pair<QPolynomial, QPolynomial> leading_terms(const SkewShape& s) {
  std::vector<long long> lhs, rhs;
  for (const auto& t : enumerate_min_via_moves(s)) lhs.push_back(t.weight());
  for (const auto& d : enumerate_excited(s)) rhs.push_back(diagram_exponent(d, true));
  return {from_exponents(lhs), from_exponents(rhs)};
}

QPolynomial excited_array_weights(const SkewShape& s) {
  std::vector<long long> exps;
  for (const auto& d : enumerate_excited(s)) exps.push_back(WeightArray{excited_array(d)}.hook_weight());
  return from_exponents(exps);
}

namespace printed {

BigRational f_oof(const SkewShape& s) {
  const auto& outer = s.outer();
  const int d = s.rows();
  BigInt total = 0;
  for (const auto& t : enumerate_oot(s)) {
    BigInt term = 1;
    for (Cell c : t.shape.cells()) term *= outer.part(d + 1 - t.grid.at(c)) - c.row + c.col;
    total += term;
  }
  return prefactor(s) * BigRational(total);
}

bool is_slim(const SkewShape& s) { return slim_inequality(s); }

QPolynomial qnhlf_rhs(const SkewShape& s, int degree) { return qnhlf_sum(s, degree, false); }

QPolynomial leading_terms_rhs(const SkewShape& s) {
  std::vector<long long> exps;
  for (const auto& d : enumerate_excited(s)) exps.push_back(diagram_exponent(d, false));
  return from_exponents(exps);
}

BigInt hook_content_count(const SkewShape& s) {
  const int d = s.rows();
  const auto& mu = s.inner();
  int r = 1;
  while (r < d && mu.part(r + 1) == mu.part(1)) ++r;
  return exact_integer(hook_content(mu, d - r), "printed hook_content_count");
}

}  // namespace printed

}  // namespace skewhook
