#include "skewhook/excited.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "skewhook/errors.hpp"

namespace skewhook {

bool ExcitedDiagram::contains(Cell c) const {
  return std::binary_search(cells.begin(), cells.end(), c);
}

bool ExcitedDiagram::is_broken(Cell c) const {
  return std::binary_search(broken.begin(), broken.end(), c);
}

ExcitedDiagram initial_diagram(const SkewShape& s) {
  ExcitedDiagram d;
  d.shape = s;
  d.cells = s.inner().cells();
  for (Cell c : d.cells) d.origin.emplace(c, c);
  for (auto& strip : kreiman(s).strips) d.gammas.push_back(strip.cells);

  std::set<int> contents;
  for (int i = 1; i < s.rows(); ++i) contents.insert(s.inner().part(i) - i);
  for (Cell c : s.cells())
    if (contents.count(c.content())) d.broken.push_back(c);
  std::sort(d.broken.begin(), d.broken.end());
  return d;
}

std::vector<Cell> active_cells(const ExcitedDiagram& d) {
  const auto& outer = d.shape.outer();
  std::vector<Cell> out;
  for (Cell c : d.cells) {
    Cell south{c.row + 1, c.col}, east{c.row, c.col + 1}, diag{c.row + 1, c.col + 1};
    bool free = true;
    for (Cell n : {south, east, diag})
      if (!outer.contains(n) || d.contains(n)) free = false;
    if (free) out.push_back(c);
  }
  return out;
}

BetaResult apply_beta_tracked(const ExcitedDiagram& d, Cell u) {
  auto active = active_cells(d);
  if (std::find(active.begin(), active.end(), u) == active.end()) {
    std::ostringstream os;
    os << "cell " << u << " is not active";
    throw PreconditionError(os.str());
  }
  const Cell south{u.row + 1, u.col};
  const Cell diag{u.row + 1, u.col + 1};
  const Cell east{u.row, u.col + 1};

  BetaResult result{d, 0};
  ExcitedDiagram& next = result.diagram;

  auto it = std::lower_bound(next.cells.begin(), next.cells.end(), u);
  next.cells.erase(it);
  next.cells.insert(std::lower_bound(next.cells.begin(), next.cells.end(), diag), diag);
  Cell from = next.origin.at(u);
  next.origin.erase(u);
  next.origin.emplace(diag, from);

  // Ladder move: the path turning east-then-north through south, diag, east
  // now turns north-then-east through south, u, east.
  for (std::size_t p = 0; p < next.gammas.size(); ++p) {
    auto& path = next.gammas[p];
    for (std::size_t k = 1; k + 1 < path.size(); ++k) {
      if (path[k] == diag && path[k - 1] == south && path[k + 1] == east) {
        path[k] = u;
        result.path_index = static_cast<int>(p) + 1;
        break;
      }
    }
    if (result.path_index) break;
  }
  if (!result.path_index) {
    std::ostringstream os;
    os << "no Kreiman path has a corner at " << diag << " for the move at " << u;
    throw StructuralError(os.str());
  }

  auto b = std::lower_bound(next.broken.begin(), next.broken.end(), diag);
  if (b == next.broken.end() || *b != diag) {
    std::ostringstream os;
    os << "expected a broken diagonal at " << diag;
    throw StructuralError(os.str());
  }
  next.broken.erase(b);
  next.broken.insert(std::lower_bound(next.broken.begin(), next.broken.end(), south), south);
  return result;
}

ExcitedDiagram apply_beta(const ExcitedDiagram& d, Cell u) {
  return apply_beta_tracked(d, u).diagram;
}

std::vector<ExcitedDiagram> enumerate_excited(const SkewShape& s) {
  std::vector<ExcitedDiagram> out;
  std::set<std::vector<Cell>> seen;
  std::deque<ExcitedDiagram> todo;
  auto start = initial_diagram(s);
  seen.insert(start.cells);
  todo.push_back(std::move(start));
  while (!todo.empty()) {
    ExcitedDiagram d = std::move(todo.front());
    todo.pop_front();
    for (Cell u : active_cells(d)) {
      auto next = apply_beta(d, u);
      if (seen.insert(next.cells).second) todo.push_back(std::move(next));
    }
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(),
            [](const ExcitedDiagram& a, const ExcitedDiagram& b) { return a.cells < b.cells; });
  return out;
}

Grid excited_array(const ExcitedDiagram& d) {
  Grid g(d.shape.outer());
  for (Cell c : d.broken) g.at(c) = 1;
  return g;
}

void check_consistency(const ExcitedDiagram& d) {
  auto fail = [&](const std::string& what) {
    throw StructuralError("excited diagram of " + d.shape.to_string() + ": " + what);
  };
  const auto& outer = d.shape.outer();
  if (static_cast<int>(d.cells.size()) != d.shape.inner().size()) fail("wrong number of cells");
  for (Cell c : d.cells) {
    if (!outer.contains(c)) fail("cell outside the outer diagram");
    Cell o = d.origin.at(c);
    if (!d.shape.inner().contains(o) || o.content() != c.content() || o.row > c.row)
      fail("origin is not a diagonal predecessor in [mu]");
  }

  auto reference = kreiman(d.shape);
  if (reference.strips.size() != d.gammas.size()) fail("wrong number of paths");
  std::set<Cell> covered;
  std::set<Cell> up_steps;
  for (std::size_t p = 0; p < d.gammas.size(); ++p) {
    const auto& path = d.gammas[p];
    const auto& ref = reference.strips[p].cells;
    if (path.empty() || path.front() != ref.front() || path.back() != ref.back())
      fail("path endpoints moved");
    for (std::size_t k = 0; k < path.size(); ++k) {
      if (!outer.contains(path[k]) || d.contains(path[k])) fail("path leaves [lambda] minus D");
      if (!covered.insert(path[k]).second) fail("paths intersect");
      if (k + 1 < path.size()) {
        Cell a = path[k], b = path[k + 1];
        bool north = b.row == a.row - 1 && b.col == a.col;
        bool eastward = b.row == a.row && b.col == a.col + 1;
        if (!north && !eastward) fail("path step is neither north nor east");
        if (north) up_steps.insert(a);
      }
    }
  }
  if (static_cast<int>(covered.size()) + static_cast<int>(d.cells.size()) != outer.size())
    fail("paths do not cover the complement");
  if (std::vector<Cell>(up_steps.begin(), up_steps.end()) != d.broken)
    fail("broken diagonals are not the north steps of the paths");
}

}  // namespace skewhook
