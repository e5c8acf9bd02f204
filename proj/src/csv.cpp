#include "qsa/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>

#include "qsa/errors.hpp"

namespace qsa {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

double parse_double(std::string_view text) {
  double x = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (ec != std::errc() || end != text.data() + text.size())
    throw ParameterError("not a number: '" + std::string(text) + "'");
  return x;
}

std::string format_vertices(const VertexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(s[i]);
  }
  return out;
}

VertexSet parse_vertices(std::string_view text) {
  std::vector<Vertex> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto sep = text.find_first_of(";,", pos);
    auto token = text.substr(pos, sep == std::string_view::npos ? std::string_view::npos : sep - pos);
    Vertex v = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || end != token.data() + token.size() || token.empty())
      throw ParameterError("bad vertex id '" + std::string(token) + "'");
    out.push_back(v);
    if (sep == std::string_view::npos) break;
    pos = sep + 1;
  }
  return make_vertex_set(std::move(out));
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw ParseError(1, "missing column '" + std::string(name) + "'");
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

CsvTable read_csv(std::istream& in) {
  CsvTable t;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split(line);
    if (t.header.empty()) {
      t.header = std::move(cells);
      continue;
    }
    if (cells.size() != t.header.size()) throw ParseError(lineno, "expected " + std::to_string(t.header.size()) + " fields");
    t.rows.push_back(std::move(cells));
  }
  if (t.header.empty()) throw ParseError(lineno, "missing header row");
  return t;
}

}  // namespace qsa
