#include "skewhook/strips.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "skewhook/errors.hpp"

namespace skewhook {

std::string to_string(StripKind kind) { return kind == StripKind::Theta ? "theta" : "gamma"; }

bool BorderStrip::contains(Cell c) const {
  return std::find(cells.begin(), cells.end(), c) != cells.end();
}

std::vector<int> BorderStrip::columns() const {
  std::vector<int> out;
  for (Cell c : cells)
    if (out.empty() || out.back() != c.col) out.push_back(c.col);
  return out;
}

int Decomposition::strip_of(Cell c) const {
  for (const auto& s : strips)
    if (s.contains(c)) return s.index;
  return 0;
}

namespace {

Decomposition decompose(const SkewShape& s, StripKind kind) {
  // content -> cells of that diagonal, northwest first
  std::map<int, std::vector<Cell>, std::greater<>> diagonals;
  for (Cell c : s.cells()) diagonals[c.content()].push_back(c);

  Decomposition out{s, kind, {}};
  int longest = 0;
  for (auto& [content, cells] : diagonals) longest = std::max(longest, static_cast<int>(cells.size()));

  auto pick = [kind](const std::vector<Cell>& diag, int rank) {
    auto m = static_cast<int>(diag.size());
    return diag[static_cast<std::size_t>(kind == StripKind::Gamma ? rank : m - 1 - rank)];
  };

  for (int eps = 0; eps < longest; ++eps) {
    LatticePath run;  // collected northeast to southwest
    int last_content = 0;
    auto flush = [&] {
      if (run.empty()) return;
      std::reverse(run.begin(), run.end());
      out.strips.push_back({kind, static_cast<int>(out.strips.size()) + 1, eps, std::move(run)});
      run.clear();
    };
    for (auto& [content, cells] : diagonals) {
      bool present = static_cast<int>(cells.size()) > eps;
      if (!present || (!run.empty() && content != last_content - 1)) flush();
      if (present) {
        run.push_back(pick(cells, eps));
        last_content = content;
      }
    }
    flush();
  }
  return out;
}

}  // namespace

Decomposition lascoux_pragacz(const SkewShape& s) { return decompose(s, StripKind::Theta); }

Decomposition kreiman(const SkewShape& s) { return decompose(s, StripKind::Gamma); }

int theta_height(const BorderStrip& strip, int row) {
  if (row < strip.top_row()) {
    std::ostringstream os;
    os << "row " << row << " lies above the top row " << strip.top_row() << " of strip "
       << strip.index;
    throw DomainError(os.str());
  }
  return row - strip.top_row();
}

std::vector<Cell> column_segment(const BorderStrip& strip, int col) {
  std::vector<Cell> seg;
  for (Cell c : strip.cells)
    if (c.col == col) seg.push_back(c);
  if (seg.empty()) {
    std::ostringstream os;
    os << "strip " << strip.index << " has no cell in column " << col;
    throw DomainError(os.str());
  }
  std::sort(seg.begin(), seg.end());
  return seg;
}

GammaThetaReport verify_gamma_theta(const SkewShape& s) {
  GammaThetaReport report;
  auto theta = lascoux_pragacz(s);
  auto gamma = kreiman(s);
  if (theta.strips.size() != gamma.strips.size())
    throw StructuralError("decompositions of " + s.to_string() + " have different lengths");
  for (std::size_t i = 0; i < theta.strips.size(); ++i) {
    const auto& t = theta.strips[i];
    const auto& g = gamma.strips[i];
    ++report.checked;
    int eps = t.epsilon;
    if (g.epsilon != eps || g.start().col - t.start().col != eps ||
        g.start().row - t.start().row != eps)
      report.failures.push_back({t.index, eps, g.start(), t.start()});
  }
  return report;
}

}  // namespace skewhook
