#include <doctest.h>

#include <vector>

#include "qsa/ec.hpp"
#include "qsa/graph.hpp"
#include "support/brute_ec.hpp"
#include "support/graph_corpus.hpp"

using namespace qsa;

TEST_SUITE("corpus") {
  TEST_CASE("isomorphism class counts") {
    auto all = corpus::all_graphs(7);
    const std::vector<std::size_t> expected{0, 1, 2, 4, 11, 34, 156, 1044};
    const std::vector<std::size_t> connected{0, 1, 1, 2, 6, 21, 112, 853};
    for (std::size_t n = 1; n <= 7; ++n) {
      CHECK(all[n].size() == expected[n]);
      std::size_t c = 0;
      for (const auto& g : all[n]) c += is_connected(g);
      CHECK(c == connected[n]);
    }
  }

  TEST_CASE("canonical code is a relabelling invariant") {
    corpus::Adjacency a{}, b{};
    // Path 0-1-2-3 and the same path labelled 2-0-3-1.
    auto link = [](corpus::Adjacency& adj, int u, int v) {
      adj[u] |= std::uint8_t(1u << v);
      adj[v] |= std::uint8_t(1u << u);
    };
    link(a, 0, 1), link(a, 1, 2), link(a, 2, 3);
    link(b, 2, 0), link(b, 0, 3), link(b, 3, 1);
    CHECK(corpus::canonical_code(a, 4) == corpus::canonical_code(b, 4));
    corpus::Adjacency star{};
    link(star, 0, 1), link(star, 0, 2), link(star, 0, 3);
    CHECK(corpus::canonical_code(a, 4) != corpus::canonical_code(star, 4));
  }

  TEST_CASE("enumerators match subset filtering on every graph up to 6 vertices") {
    auto all = corpus::all_graphs(6);
    std::size_t compared = 0;
    for (std::size_t n = 2; n <= 6; ++n)
      for (const auto& g : all[n])
        for (Vertex v = 0; v < n; ++v)
          for (std::size_t d : {1, 2}) {
            std::vector<VertexSet> got;
            for (const auto& ec : find_ec_within_distance(g, v, d, OrderSet{true, true})) got.push_back(ec.vertices);
            auto accept = [&](const VertexSet& h) { return is_exceptional(g, h); };
            CHECK(got == oracle::brute_configurations(g, v, d, true, true, accept));
            ++compared;
          }
    CHECK(compared > 0);
  }
}
