#ifndef QSA_CSV_HPP_
#define QSA_CSV_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qsa/graph.hpp"

namespace qsa {

/// Shortest decimal text that parses back to exactly `x`; "inf", "-inf",
/// "nan" for non-finite values.
std::string format_double(double x);
double parse_double(std::string_view text);

/// Vertex list joined by ';' (CSV-safe).
std::string format_vertices(const VertexSet& s);
VertexSet parse_vertices(std::string_view text);

/// Comma-separated table with a header row and no quoting.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Throws ParseError if the column is missing.
  std::size_t column(std::string_view name) const;
};

CsvTable read_csv(std::istream& in);

}  // namespace qsa

#endif
