#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wpoly/betti.hpp"
#include "wpoly/codes.hpp"
#include "wpoly/field_matrix.hpp"
#include "wpoly/matroid.hpp"
#include "wpoly/poly.hpp"
#include "wpoly/weight_poly.hpp"

namespace wpoly {

// Matroid files come in two interchangeable shapes, told apart by the first
// non-blank character ('n' starts the text form, '{' the JSON form).
//
// Text:                       JSON:
//   n=7                         {"n":7,"bases":[[1,3,6],[1,3,5]]}
//   {1,3,6}
//   {1,3,5}
//
// Blank lines are ignored; the empty basis is written {}. Parse failures
// throw ParseError with a line number.
Matroid parse_matroid(std::istream& in);
Matroid load_matroid(const std::string& path);
std::string render_matroid_text(const Matroid& m);
std::string render_matroid_json(const Matroid& m);

// Matrix files: a header line `p=<p> m=<m> rows=<r> cols=<c>`, then one line
// per row. Prime-field entries are integers 0..p-1. Extension-field entries
// are either the compact encoding sum a_i p^i (canonical) or polynomial
// tokens like 1+2*t+t^2.
FieldMatrix parse_matrix(std::istream& in);
FieldMatrix load_matrix(const std::string& path);
std::string render_matrix_text(const FieldMatrix& a);

// Renderers used by the CLI; text forms end with a newline.
std::string render_rank_text(const Matroid& m);
std::string render_rank_json(const Matroid& m);
std::string render_circuits_text(const Matroid& m);
std::string render_circuits_json(const Matroid& m);
std::string render_betti_text(const std::vector<BettiTable>& tables);
std::string render_betti_json(const std::vector<BettiTable>& tables);
std::string render_gwp_text(const std::vector<UniPoly>& gwps);
std::string render_gwp_json(const std::vector<UniPoly>& gwps);
std::string render_enumerator_text(const TriPoly& w);
std::string render_enumerator_json(const TriPoly& w);
std::string render_tutte_text(const BiPoly& t);
std::string render_tutte_json(const BiPoly& t);
std::string render_weights_text(const WeightHierarchy& h);
std::string render_weights_json(const WeightHierarchy& h);
std::string render_distribution_text(const WeightDistribution& dist);
std::string render_distribution_json(const WeightDistribution& dist);

}  // namespace wpoly
