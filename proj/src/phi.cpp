#include "skewhook/phi.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "skewhook/errors.hpp"

namespace skewhook {

namespace {

// Cells of a path grouped by column, west to east.
std::vector<std::vector<Cell>> path_columns(const LatticePath& path) {
  std::vector<std::vector<Cell>> cols;
  for (Cell c : path) {
    if (cols.empty() || cols.back().front().col != c.col) cols.emplace_back();
    cols.back().push_back(c);
  }
  return cols;
}

void require_connected(const SkewShape& s, const char* what) {
  if (!s.is_connected())
    throw UnsupportedShape(std::string(what) + " needs a connected shape, got " + s.to_string());
}

}  // namespace

SkewTableau phi(const ExcitedDiagram& d) {
  require_connected(d.shape, "phi");
  auto theta = lascoux_pragacz(d.shape);
  if (theta.strips.size() != d.gammas.size())
    throw StructuralError("diagram carries " + std::to_string(d.gammas.size()) +
                          " paths but the shape has " + std::to_string(theta.strips.size()) +
                          " strips");
  SkewTableau t(d.shape);
  for (std::size_t i = 0; i < theta.strips.size(); ++i) {
    auto gcols = path_columns(d.gammas[i]);
    auto tcols = path_columns(theta.strips[i].cells);
    if (gcols.size() != tcols.size())
      throw StructuralError("path " + std::to_string(i + 1) + " and its strip differ in width");
    for (std::size_t j = 0; j < tcols.size(); ++j) {
      int b = static_cast<int>(std::count_if(gcols[j].begin(), gcols[j].end(),
                                             [&](Cell c) { return d.is_broken(c); }));
      // Path cells run south to north within a column.
      Cell bottom = tcols[j].front();
      int value = j == 0 ? b : t.at({bottom.row, bottom.col - 1}) + b;
      for (Cell c : tcols[j]) t.set(c, value--);
    }
  }
  return t;
}

int alpha(const SkewTableau& t, Cell u) {
  const auto& s = t.shape();
  if (!s.inner().contains(u)) {
    std::ostringstream os;
    os << "cell " << u << " is not in the inner shape";
    throw DomainError(os.str());
  }
  require_connected(s, "alpha");
  auto theta = lascoux_pragacz(s);
  if (!is_minimal(t, theta)) throw PreconditionError("alpha needs a minimal tableau");
  auto bar = excess(t);
  const int threshold = s.inner().conjugate().part(u.col) - u.row;
  int count = 0;
  for (const auto& strip : theta.strips) {
    auto it = std::find_if(strip.cells.begin(), strip.cells.end(),
                           [&](Cell c) { return c.col == u.col; });
    if (it != strip.cells.end() && bar.at(*it) > threshold) ++count;
  }
  return count;
}

ExcitedDiagram phi_inverse(const SkewTableau& t) {
  const auto& s = t.shape();
  require_connected(s, "phi_inverse");
  if (!is_minimal(t)) throw PreconditionError("phi_inverse needs a minimal tableau");

  std::map<Cell, int> remaining;  // origin -> diagonal steps still to take
  for (Cell u : s.inner().cells()) remaining[u] = alpha(t, u);

  ExcitedDiagram d = initial_diagram(s);
  for (;;) {
    // Move the southeastern-most cell that still has to travel.
    std::optional<Cell> pick;
    for (Cell c : active_cells(d)) {
      if (remaining[d.origin.at(c)] == 0) continue;
      if (!pick || c.row + c.col > pick->row + pick->col ||
          (c.row + c.col == pick->row + pick->col && c.row > pick->row))
        pick = c;
    }
    if (!pick) break;
    --remaining[d.origin.at(*pick)];
    d = apply_beta(d, *pick);
  }
  for (auto& [origin, left] : remaining)
    if (left != 0) {
      std::ostringstream os;
      os << "displacement of " << origin << " cannot be realized by excited moves";
      throw StructuralError(os.str());
    }
  return d;
}

CommutationReport verify_commutation(const SkewShape& s) {
  require_connected(s, "verify_commutation");
  CommutationReport report;
  auto theta = lascoux_pragacz(s);
  for (const auto& d : enumerate_excited(s)) {
    auto t = phi(d);
    auto moves = active_columns(t, theta);
    for (Cell u : active_cells(d)) {
      ++report.checked;
      auto moved = apply_beta_tracked(d, u);
      DeltaMove target{moved.path_index, d.origin.at(u).col};
      if (std::find(moves.begin(), moves.end(), target) == moves.end()) {
        std::ostringstream os;
        os << "delta (" << target.strip << ";" << target.col << ") is not active";
        report.failures.push_back({d.cells, u, os.str()});
        continue;
      }
      if (!(apply_delta(t, target, theta) == phi(moved.diagram)))
        report.failures.push_back({d.cells, u, "phi(beta(D)) differs from delta(phi(D))"});
    }
  }
  return report;
}

}  // namespace skewhook
