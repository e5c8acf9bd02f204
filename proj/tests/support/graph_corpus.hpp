#ifndef QSA_TESTS_GRAPH_CORPUS_HPP_
#define QSA_TESTS_GRAPH_CORPUS_HPP_

// Every simple graph on n <= 8 vertices up to isomorphism, grown one vertex
// at a time and deduplicated by a canonical code (maximum upper-triangle
// bit string over all relabelings that respect an invariant colour
// refinement).

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "qsa/graph.hpp"

namespace corpus {

inline constexpr std::size_t max_order = 8;
using Adjacency = std::array<std::uint8_t, max_order>;

inline std::uint64_t code_of(const Adjacency& adj, std::size_t n, const std::vector<int>& perm) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) code = (code << 1) | ((adj[perm[i]] >> perm[j]) & 1u);
  return code;
}

/// Colour classes of the stable refinement, in invariant order.
inline std::vector<std::vector<int>> refined_cells(const Adjacency& adj, std::size_t n) {
  std::vector<int> colour(n, 0);
  for (std::size_t round = 0; round <= n; ++round) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<int> s{colour[v]};
      std::vector<int> nb;
      for (std::size_t w = 0; w < n; ++w)
        if ((adj[v] >> w) & 1u) nb.push_back(colour[w]);
      std::sort(nb.begin(), nb.end());
      s.push_back(static_cast<int>(nb.size()));
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v] = {s, static_cast<int>(v)};
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& [s, v] : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto& [s, value] : rank) value = r++;
    std::vector<int> next(n);
    for (std::size_t v = 0; v < n; ++v) next[v] = rank[sig[v].first];
    if (next == colour) break;
    colour = next;
  }
  int colours = *std::max_element(colour.begin(), colour.end()) + 1;
  std::vector<std::vector<int>> cells(colours);
  for (std::size_t v = 0; v < n; ++v) cells[colour[v]].push_back(static_cast<int>(v));
  return cells;
}

inline std::uint64_t canonical_code(const Adjacency& adj, std::size_t n) {
  auto cells = refined_cells(adj, n);
  std::uint64_t best = 0;
  bool first = true;
  // Odometer over the permutations of every cell.
  for (auto& c : cells) std::sort(c.begin(), c.end());
  while (true) {
    std::vector<int> perm;
    for (const auto& c : cells) perm.insert(perm.end(), c.begin(), c.end());
    std::uint64_t code = code_of(adj, n, perm);
    if (first || code > best) best = code;
    first = false;
    std::size_t k = 0;
    while (k < cells.size() && !std::next_permutation(cells[k].begin(), cells[k].end())) ++k;
    if (k == cells.size()) break;
  }
  return best;
}

inline qsa::Graph to_graph(const Adjacency& adj, std::size_t n) {
  std::vector<qsa::Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if ((adj[i] >> j) & 1u) edges.emplace_back(static_cast<qsa::Vertex>(i), static_cast<qsa::Vertex>(j));
  return qsa::Graph::from_edges(n, edges);
}

/// result[n] holds the isomorphism classes on n vertices, n = 1..max_n.
inline std::vector<std::vector<qsa::Graph>> all_graphs(std::size_t max_n = max_order) {
  std::vector<std::vector<qsa::Graph>> result(max_n + 1);
  std::vector<Adjacency> layer{Adjacency{}};
  result[1].push_back(to_graph(layer[0], 1));
  for (std::size_t n = 2; n <= max_n; ++n) {
    std::set<std::uint64_t> seen;
    std::vector<Adjacency> next;
    const std::size_t old = n - 1;
    for (const auto& base : layer)
      for (std::uint32_t mask = 0; mask < (1u << old); ++mask) {
        Adjacency adj = base;
        for (std::size_t w = 0; w < old; ++w)
          if ((mask >> w) & 1u) {
            adj[w] |= std::uint8_t(1u << old);
            adj[old] |= std::uint8_t(1u << w);
          }
        if (seen.insert(canonical_code(adj, n)).second) next.push_back(adj);
      }
    layer = std::move(next);
    for (const auto& adj : layer) result[n].push_back(to_graph(adj, n));
  }
  return result;
}

}  // namespace corpus

#endif
