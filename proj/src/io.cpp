#include "skewhook/io.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "skewhook/errors.hpp"

namespace skewhook {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw FormatError(std::string("missing member \"") + key + "\"");
  return j.at(key);
}

int as_int(const Json& j) {
  if (!j.is_number_integer()) throw FormatError("expected an integer, got " + j.dump());
  return j.get<int>();
}

Json cell_to_json(Cell c) { return Json::array({c.row, c.col}); }

// Fixed-width grid from per-cell labels; rows with no cells become empty lines.
std::string render_rows(const Partition& outer, const std::function<std::string(Cell)>& label) {
  std::size_t width = 1;
  for (Cell c : outer.cells()) width = std::max(width, label(c).size());
  std::ostringstream os;
  for (int r = 1; r <= outer.length(); ++r) {
    if (r > 1) os << '\n';
    for (int c = 1; c <= outer.part(r); ++c) {
      std::string s = label({r, c});
      if (c > 1) os << ' ';
      os << std::string(width - s.size(), ' ') << s;
    }
  }
  return os.str();
}

}  // namespace

Json parts_to_json(const Partition& p) {
  Json j = Json::array();
  for (int x : p.parts()) j.push_back(x);
  return j;
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("expected a list of parts, got " + j.dump());
  std::vector<int> parts;
  for (const auto& x : j) parts.push_back(as_int(x));
  try {
    return Partition(parts);
  } catch (const DomainError& e) {
    throw FormatError(e.what());
  }
}

Json shape_to_json(const SkewShape& s) {
  return Json{{"outer", parts_to_json(s.outer())}, {"inner", parts_to_json(s.inner())}};
}

SkewShape shape_from_json(const Json& j) {
  Partition outer = partition_from_json(member(j, "outer"));
  Partition inner = j.contains("inner") ? partition_from_json(j.at("inner")) : Partition{};
  try {
    return SkewShape(outer, inner);
  } catch (const DomainError& e) {
    throw FormatError(e.what());
  }
}

Json decomposition_to_json(const Decomposition& d) {
  Json strips = Json::array();
  for (const auto& s : d.strips)
    strips.push_back(Json{{"epsilon", s.epsilon}, {"cells", cells_to_json(s.cells)}});
  return Json{{"kind", to_string(d.kind)}, {"strips", strips}};
}

Json cells_to_json(const std::vector<Cell>& cells) {
  Json j = Json::array();
  for (Cell c : cells) j.push_back(cell_to_json(c));
  return j;
}

std::vector<Cell> cells_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("expected a list of cells, got " + j.dump());
  std::vector<Cell> cells;
  for (const auto& c : j) {
    if (!c.is_array() || c.size() != 2) throw FormatError("a cell is a pair [row, col], got " + c.dump());
    cells.push_back({as_int(c[0]), as_int(c[1])});
  }
  return cells;
}

Json diagram_to_json(const ExcitedDiagram& d) {
  return Json{{"cells", cells_to_json(d.cells)}, {"broken", cells_to_json(d.broken)}};
}

ExcitedDiagram diagram_from_json(const Json& j, const SkewShape& s) {
  auto cells = cells_from_json(member(j, "cells"));
  std::sort(cells.begin(), cells.end());
  for (auto& d : enumerate_excited(s)) {
    if (d.cells != cells) continue;
    if (j.contains("broken")) {
      auto broken = cells_from_json(j.at("broken"));
      std::sort(broken.begin(), broken.end());
      if (broken != d.broken) throw FormatError("broken diagonals do not match the diagram");
    }
    return std::move(d);
  }
  throw FormatError("cells do not form an excited diagram of " + s.to_string());
}

Json grid_to_json(const Grid& g) {
  Json values = Json::array();
  for (const auto& row : g.rows()) values.push_back(row);
  return Json{{"outer", parts_to_json(g.outer())}, {"values", values}};
}

Grid grid_from_json(const Json& j) {
  Partition outer = partition_from_json(member(j, "outer"));
  const Json& values = member(j, "values");
  if (!values.is_array() || static_cast<int>(values.size()) != outer.length())
    throw FormatError("values must have one row per part of outer");
  Grid g(outer);
  for (int r = 1; r <= outer.length(); ++r) {
    const Json& row = values[static_cast<std::size_t>(r - 1)];
    if (!row.is_array() || static_cast<int>(row.size()) != outer.part(r))
      throw FormatError("row " + std::to_string(r) + " has the wrong length");
    for (int c = 1; c <= outer.part(r); ++c) g.at({r, c}) = as_int(row[static_cast<std::size_t>(c - 1)]);
  }
  return g;
}

Json tableau_to_json(const SkewTableau& t) {
  const auto& s = t.shape();
  Json rows = Json::array();
  for (int r = 1; r <= s.outer().length(); ++r) {
    Json row = Json::array();
    for (int c = 1; c <= s.outer().part(r); ++c) {
      if (s.inner().contains(Cell{r, c}))
        row.push_back(nullptr);
      else
        row.push_back(t.at({r, c}));
    }
    rows.push_back(row);
  }
  Json j = shape_to_json(s);
  j["rows"] = rows;
  return j;
}

SkewTableau tableau_from_json(const Json& j) {
  SkewShape s = shape_from_json(j);
  const Json& rows = member(j, "rows");
  if (!rows.is_array() || static_cast<int>(rows.size()) != s.outer().length())
    throw FormatError("rows must have one entry per part of outer");
  SkewTableau t(s);
  for (int r = 1; r <= s.outer().length(); ++r) {
    const Json& row = rows[static_cast<std::size_t>(r - 1)];
    if (!row.is_array() || static_cast<int>(row.size()) != s.outer().part(r))
      throw FormatError("row " + std::to_string(r) + " has the wrong length");
    for (int c = 1; c <= s.outer().part(r); ++c) {
      const Json& v = row[static_cast<std::size_t>(c - 1)];
      bool inner = s.inner().contains(Cell{r, c});
      if (inner != v.is_null())
        throw FormatError("null must appear exactly at the inner cells");
      if (!inner) t.set({r, c}, as_int(v));
    }
  }
  return t;
}

Json mu_tableau_to_json(const MuTableau& t) {
  Json rows = Json::array();
  for (const auto& row : t.grid.rows()) rows.push_back(row);
  return Json{{"shape", parts_to_json(t.shape)}, {"rows", rows}};
}

Json qpoly_to_json(const QPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  return Json{{"degree", p.degree()}, {"coeffs", coeffs}};
}

QPolynomial qpoly_from_json(const Json& j) {
  int degree = as_int(member(j, "degree"));
  const Json& coeffs = member(j, "coeffs");
  if (degree < 0 || !coeffs.is_array() || static_cast<int>(coeffs.size()) != degree + 1)
    throw FormatError("coeffs must list degree + 1 values");
  std::vector<BigInt> values;
  for (const auto& c : coeffs) {
    if (!c.is_string()) throw FormatError("coefficients are decimal strings");
    try {
      values.emplace_back(c.get<std::string>());
    } catch (const std::exception&) {
      throw FormatError("bad coefficient " + c.dump());
    }
  }
  return QPolynomial(degree, std::move(values));
}

std::string render_ascii(const SkewTableau& t) {
  const auto& s = t.shape();
  return render_rows(s.outer(), [&](Cell c) {
    return s.inner().contains(c) ? std::string(".") : std::to_string(t.at(c));
  });
}

std::string render_ascii(const SkewShape& s) {
  return render_rows(s.outer(), [&](Cell c) { return std::string(s.inner().contains(c) ? "." : "#"); });
}

std::string render_ascii(const ExcitedDiagram& d) {
  return render_rows(d.shape.outer(), [&](Cell c) {
    return std::string(d.contains(c) ? "X" : d.is_broken(c) ? "*" : "o");
  });
}

std::string render_ascii(const Grid& g) {
  return render_rows(g.outer(), [&](Cell c) { return std::to_string(g.at(c)); });
}

std::string render_ascii(const MuTableau& t) {
  return render_rows(t.shape, [&](Cell c) { return std::to_string(t.grid.at(c)); });
}

}  // namespace skewhook
