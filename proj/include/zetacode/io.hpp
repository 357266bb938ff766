#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "zetacode/graph.hpp"
#include "zetacode/parity.hpp"
#include "zetacode/series.hpp"

namespace zetacode {

struct ParseError : std::runtime_error {
  ParseError(const std::string& source, std::size_t line, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + message) {}
};

// Edge list: first data line "V E", then E lines "u v" (0-based vertex ids).
// '#' starts a comment; blank lines are skipped.
UndirectedMultigraph parse_edge_list(std::istream& in, const std::string& source);
UndirectedMultigraph read_edge_list(const std::string& path);
void write_edge_list(std::ostream& out, const UndirectedMultigraph& g);

// Dense parity text: one row per line, 0/1 entries separated by spaces.
ParityCheckMatrix parse_dense_parity(std::istream& in, const std::string& source);
ParityCheckMatrix read_dense_parity(const std::string& path);

// alist: "n m", max column/row weights, per-column weights, per-row weights,
// then per-column and per-row 1-based index lists (0 entries are padding).
ParityCheckMatrix parse_alist(std::istream& in, const std::string& source);
ParityCheckMatrix read_alist(const std::string& path);
void write_alist(std::ostream& out, const ParityCheckMatrix& H);

// {"vars": p, "truncation": D, "terms": [{"exp": [...], "coef": "..."}]},
// terms in graded-lex order, coefficients as decimal strings
nlohmann::json multipoly_json(const MultiPoly& f);
// {"coeffs": ["...", ...]} ascending-degree integer strings
nlohmann::json unipoly_json(const UniPoly& f);

}  // namespace zetacode
