#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>

#include "qsa/errors.hpp"
#include "qsa/graph.hpp"

using namespace qsa;

namespace {

std::size_t parse_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    parse_edge_list(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_SUITE("graph_io") {
  TEST_CASE("round trip through a stream") {
    Graph k4 = complete_graph(4);
    std::stringstream s;
    write_edge_list(k4, s);
    CHECK(s.str() == "n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    CHECK(parse_edge_list(s) == k4);
  }

  TEST_CASE("round trip through a file") {
    auto path = std::filesystem::temp_directory_path() / "qsa_io_roundtrip.edges";
    Graph g = cycle_graph(7);
    write_edge_list(g, path);
    CHECK(read_edge_list(path) == g);
    std::filesystem::remove(path);
  }

  TEST_CASE("comments, blank lines and isolated vertices") {
    std::istringstream in("# header comment\n\nn 5\n0 1\n  # indented comment\n3 1\n\n");
    Graph g = parse_edge_list(in);
    CHECK(g.order() == 5);
    CHECK(g.size() == 2);
    CHECK(g.degree(4) == 0);
  }

  TEST_CASE("errors carry the offending line") {
    CHECK(parse_error_line("n 4\n0 1\n3 3\n") == 3);
    CHECK(parse_error_line("n 5\n0 7\n") == 2);
    CHECK(parse_error_line("n 4\n0 1\n1 0\n") == 3);
    CHECK(parse_error_line("0 1\n") == 1);
    CHECK(parse_error_line("n 4\n0 x\n") == 2);
    CHECK(parse_error_line("n 4\n0 1 2\n") == 2);
    CHECK(parse_error_line("") != 0);
  }

  TEST_CASE("missing file") {
    CHECK_THROWS(read_edge_list("/nonexistent/qsa.edges"));
  }
}
