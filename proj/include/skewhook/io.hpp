#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "skewhook/excited.hpp"
#include "skewhook/qseries.hpp"
#include "skewhook/shape.hpp"
#include "skewhook/strips.hpp"
#include "skewhook/tableaux.hpp"

namespace skewhook {

using Json = nlohmann::ordered_json;

/// Parse failures in any of the readers below.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json parts_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// {"outer":[5,5,3,3,2],"inner":[2,2]}
Json shape_to_json(const SkewShape& s);
SkewShape shape_from_json(const Json& j);

/// {"kind":"theta","strips":[{"epsilon":0,"cells":[[5,1],...]},...]}
Json decomposition_to_json(const Decomposition& d);

Json cells_to_json(const std::vector<Cell>& cells);
std::vector<Cell> cells_from_json(const Json& j);

/// {"cells":[[1,1]],"broken":[[2,2]]}
Json diagram_to_json(const ExcitedDiagram& d);
/// Finds the excited diagram of s with these cells. A "broken" member, if
/// present, must agree with the recomputed broken diagonals.
ExcitedDiagram diagram_from_json(const Json& j, const SkewShape& s);

/// {"outer":[...],"values":[[0,0],[0,1]]}
Json grid_to_json(const Grid& g);
Grid grid_from_json(const Json& j);

/// {"outer":[...],"inner":[...],"rows":[[null,0,...],...]}
Json tableau_to_json(const SkewTableau& t);
SkewTableau tableau_from_json(const Json& j);

/// {"shape":[...],"rows":[[1,1],[2]]}
Json mu_tableau_to_json(const MuTableau& t);

/// {"degree":12,"coeffs":["1","1","2",...]}
Json qpoly_to_json(const QPolynomial& p);
QPolynomial qpoly_from_json(const Json& j);

/// Rows joined by newlines, cells separated by one space and padded to a
/// common width. Inner cells print as '.'.
std::string render_ascii(const SkewTableau& t);
/// '.' for [μ], '#' for [λ/μ].
std::string render_ascii(const SkewShape& s);
/// 'X' for cells of D, '*' for broken diagonals, 'o' for the rest of [λ].
std::string render_ascii(const ExcitedDiagram& d);
std::string render_ascii(const Grid& g);
std::string render_ascii(const MuTableau& t);

}  // namespace skewhook
