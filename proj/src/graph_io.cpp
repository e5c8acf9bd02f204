#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "qsa/errors.hpp"
#include "qsa/graph.hpp"

namespace qsa {

namespace {

/// Empty, whitespace-only or '#' comment line.
bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    std::istringstream fields(line);
    if (!have_header) {
      std::string tag;
      long long count = -1;
      std::string extra;
      if (!(fields >> tag >> count) || tag != "n" || count < 0 || (fields >> extra))
        throw ParseError(lineno, "expected header 'n <vertex_count>'");
      n = static_cast<std::size_t>(count);
      have_header = true;
      continue;
    }
    long long u = -1, v = -1;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra)) throw ParseError(lineno, "malformed edge line '" + line + "'");
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw ParseError(lineno, "vertex id out of range [0, " + std::to_string(n) + ")");
    if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
    Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!seen.insert(e).second) throw ParseError(lineno, "duplicate edge");
    edges.push_back(e);
  }
  if (!have_header) throw ParseError(std::max<std::size_t>(lineno, 1), "missing header 'n <vertex_count>'");
  if (n > std::numeric_limits<Vertex>::max()) throw ParseError(1, "vertex count too large");
  return Graph::from_edges(n, edges);
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_edge_list(g, out);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace qsa
