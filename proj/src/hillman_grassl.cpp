#include "skewhook/hillman_grassl.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "skewhook/errors.hpp"
#include "skewhook/phi.hpp"

namespace skewhook {

bool RppLambda::is_valid() const {
  const auto& outer = values.outer();
  for (Cell c : outer.cells()) {
    int v = values.at(c);
    if (v < 0) return false;
    if (c.col > 1 && values.at({c.row, c.col - 1}) > v) return false;
    if (c.row > 1 && values.at({c.row - 1, c.col}) > v) return false;
  }
  return true;
}

long long WeightArray::hook_weight() const {
  long long w = 0;
  for (Cell c : values.outer().cells()) w += static_cast<long long>(values.at(c)) * values.outer().hook(c);
  return w;
}

std::string to_string(const Grid& g) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < g.rows().size(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < g.rows()[i].size(); ++j) os << (j ? "," : "") << g.rows()[i][j];
    os << ']';
  }
  os << ']';
  return os.str();
}

WeightArray hg_forward(const RppLambda& p) { return hg_forward(p, nullptr); }

WeightArray hg_forward(const RppLambda& p, std::vector<Cell>* trace) {
  if (!p.is_valid()) throw PreconditionError("hg_forward needs a reverse plane partition");
  const auto& outer = p.values.outer();
  const auto heights = outer.conjugate();
  Grid pi = p.values;
  WeightArray out{Grid(outer)};
  for (;;) {
    std::optional<Cell> start;
    for (int col = 1; col <= outer.part(1) && !start; ++col)
      for (int row = heights.part(col); row >= 1; --row)
        if (pi.at({row, col}) != 0) {
          start = Cell{row, col};
          break;
        }
    if (!start) break;

    std::vector<Cell> path{*start};
    Cell at = *start;
    for (;;) {
      Cell north{at.row - 1, at.col}, east{at.row, at.col + 1};
      if (at.row > 1 && pi.at(north) == pi.at(at))
        at = north;
      else if (outer.contains(east))
        at = east;
      else
        break;
      path.push_back(at);
    }
    for (Cell c : path) --pi.at(c);
    Cell unit{at.row, start->col};
    if (static_cast<int>(path.size()) != outer.hook(unit))
      throw StructuralError("Hillman-Grassl path length differs from the hook length");
    if (!RppLambda{pi}.is_valid())
      throw StructuralError("Hillman-Grassl step broke the reverse plane partition");
    ++out.values.at(unit);
    if (trace) trace->push_back(unit);
  }
  return out;
}

RppLambda hg_inverse(const WeightArray& a) {
  const auto& outer = a.values.outer();
  for (Cell c : outer.cells())
    if (a.values.at(c) < 0) throw PreconditionError("hg_inverse needs a nonnegative array");
  const auto heights = outer.conjugate();
  Grid pi(outer);
  for (int col = outer.part(1); col >= 1; --col) {
    for (int row = 1; row <= heights.part(col); ++row) {
      for (int n = a.values.at({row, col}); n > 0; --n) {
        std::vector<Cell> path;
        Cell at{row, outer.part(row)};
        path.push_back(at);
        for (;;) {
          Cell south{at.row + 1, at.col}, west{at.row, at.col - 1};
          if (outer.contains(south) && pi.at(south) == pi.at(at))
            at = south;
          else if (at.col > col)
            at = west;
          else
            break;
          path.push_back(at);
        }
        for (Cell c : path) ++pi.at(c);
      }
    }
  }
  return RppLambda{pi};
}

RppLambda embed(const SkewTableau& t) { return RppLambda{t.grid()}; }

bool is_embedded_ssyt(const RppLambda& p, const SkewShape& s) {
  if (!(p.values.outer() == s.outer())) return false;
  for (Cell c : s.inner().cells())
    if (p.values.at(c) != 0) return false;
  SkewTableau t(s);
  for (Cell c : s.cells()) t.set(c, p.values.at(c));
  return t.is_semistandard();
}

ExcitedDiagram classify_restricted(const WeightArray& a, const SkewShape& s) {
  std::vector<ExcitedDiagram> matches;
  for (auto& d : enumerate_excited(s)) {
    bool fits = true;
    for (Cell c : d.cells)
      if (a.values.at(c) != 0) fits = false;
    for (Cell c : d.broken)
      if (a.values.at(c) <= 0) fits = false;
    if (fits) matches.push_back(std::move(d));
  }
  if (matches.empty())
    throw StructuralError("array " + to_string(a.values) + " is outside the restricted image of " +
                          s.to_string());
  if (matches.size() > 1)
    throw StructuralError("array " + to_string(a.values) + " matches several excited diagrams");
  return std::move(matches.front());
}

Partition peeled_partition(const SkewShape& s, int i) {
  auto theta = lascoux_pragacz(s);
  if (i < 1 || i > static_cast<int>(theta.strips.size()) + 1)
    throw DomainError("strip index " + std::to_string(i) + " out of range");
  std::set<Cell> removed;
  for (int k = 0; k < i - 1; ++k)
    for (Cell c : theta.strips[static_cast<std::size_t>(k)].cells) removed.insert(c);
  const auto& outer = s.outer();
  std::vector<int> rows;
  for (int r = 1; r <= outer.length(); ++r) {
    int len = 0;
    while (len < outer.part(r) && !removed.count({r, len + 1})) ++len;
    for (int j = len + 1; j <= outer.part(r); ++j)
      if (!removed.count({r, j}))
        throw StructuralError("peeling strips from " + s.to_string() + " leaves a non-partition");
    rows.push_back(len);
  }
  for (std::size_t r = 1; r < rows.size(); ++r)
    if (rows[r] > rows[r - 1])
      throw StructuralError("peeling strips from " + s.to_string() + " leaves a non-partition");
  return Partition(rows);
}

RppLambda strip_restriction(const SkewTableau& t, int i) {
  const auto& s = t.shape();
  auto theta = lascoux_pragacz(s);
  if (i < 1 || i > static_cast<int>(theta.strips.size()))
    throw DomainError("strip index " + std::to_string(i) + " out of range");
  Grid g(peeled_partition(s, i));
  for (Cell c : theta.strips[static_cast<std::size_t>(i - 1)].cells) g.at(c) = t.at(c);
  return RppLambda{g};
}

namespace {

std::string cells_id(const std::vector<Cell>& cells) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < cells.size(); ++k) os << (k ? "," : "") << cells[k];
  os << '}';
  return os.str();
}

}  // namespace

HgReport verify_phi_vs_hg(const SkewShape& s) {
  if (!s.is_connected())
    throw UnsupportedShape("verify_phi_vs_hg needs a connected shape, got " + s.to_string());
  HgReport report;
  for (const auto& d : enumerate_excited(s)) {
    ++report.checked;
    auto lhs = hg_inverse(WeightArray{excited_array(d)});
    auto rhs = embed(phi(d));
    if (!(lhs == rhs))
      report.failures.push_back({"D=" + cells_id(d.cells), to_string(rhs.values), to_string(lhs.values)});
  }
  return report;
}

HgReport verify_additivity(const SkewShape& s) {
  if (!s.is_connected())
    throw UnsupportedShape("verify_additivity needs a connected shape, got " + s.to_string());
  HgReport report;
  auto theta = lascoux_pragacz(s);
  const auto& outer = s.outer();
  for (const auto& t : enumerate_min_via_moves(s)) {
    auto d = phi_inverse(t);
    const std::string id = "T=" + to_string(t.grid());
    Grid sum(outer);
    bool aligned = true;
    for (const auto& strip : theta.strips) {
      ++report.checked;
      auto part = hg_forward(strip_restriction(t, strip.index)).values;
      const int eps = strip.epsilon;
      Grid expected(part.outer());
      bool fits = true;
      for (Cell b : d.gammas[static_cast<std::size_t>(strip.index - 1)]) {
        if (!d.is_broken(b)) continue;
        Cell moved = b.shifted(-eps);
        if (expected.outer().contains(moved))
          expected.at(moved) = 1;
        else
          fits = false;
      }
      if (!fits || !(expected == part))
        report.failures.push_back({id + " strip " + std::to_string(strip.index),
                                   to_string(expected), to_string(part)});
      for (Cell c : part.outer().cells()) {
        if (part.at(c) == 0) continue;
        Cell back = c.shifted(eps);
        if (outer.contains(back))
          sum.at(back) += part.at(c);
        else
          aligned = false;
      }
    }
    ++report.checked;
    auto whole = hg_forward(embed(t)).values;
    if (!aligned || !(sum == whole))
      report.failures.push_back({id + " sum", to_string(whole), to_string(sum)});
  }
  return report;
}

}  // namespace skewhook
