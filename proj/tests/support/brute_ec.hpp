#ifndef QSA_TESTS_BRUTE_EC_HPP_
#define QSA_TESTS_BRUTE_EC_HPP_

// Exhaustive enumeration of exceptional configurations by subset filtering.

#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

#include "qsa/ec.hpp"
#include "qsa/graph.hpp"

namespace oracle {

inline bool induced_connected(const qsa::Graph& g, const qsa::VertexSet& h) {
  std::vector<char> seen(h.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < h.size(); ++j)
      if (!seen[j] && g.adjacent(h[i], h[j])) {
        seen[j] = 1;
        ++count;
        stack.push_back(j);
      }
  }
  return count == h.size();
}

/// Degree-sum condition checked over every 2-colouring of h.
inline bool exceptional_by_colourings(const qsa::Graph& g, const qsa::VertexSet& h) {
  const std::size_t k = h.size();
  bool bipartite = false;
  bool balanced = false;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    bool proper = true;
    for (std::size_t i = 0; i < k && proper; ++i)
      for (std::size_t j = i + 1; j < k && proper; ++j)
        if (g.adjacent(h[i], h[j]) && ((mask >> i) & 1u) == ((mask >> j) & 1u)) proper = false;
    if (!proper) continue;
    bipartite = true;
    long long diff = 0;
    for (std::size_t i = 0; i < k; ++i)
      diff += ((mask >> i) & 1u) ? static_cast<long long>(g.degree(h[i])) : -static_cast<long long>(g.degree(h[i]));
    if (diff == 0) balanced = true;
  }
  return !bipartite || balanced;
}

inline std::vector<std::size_t> hop_distances(const qsa::Graph& g, qsa::Vertex v) {
  std::vector<std::size_t> dist(g.order(), SIZE_MAX);
  std::queue<qsa::Vertex> q;
  dist[v] = 0;
  q.push(v);
  while (!q.empty()) {
    auto u = q.front();
    q.pop();
    for (auto w : g.neighbors(u))
      if (dist[w] == SIZE_MAX) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

/// Connected subsets of size 2 and/or 3 containing v, all of whose vertices
/// lie within `distance` hops of v, accepted by `accept`. Sorted by
/// (order, vertex set).
inline std::vector<qsa::VertexSet> brute_configurations(const qsa::Graph& g, qsa::Vertex v, std::size_t distance,
                                                        bool two, bool three,
                                                        const std::function<bool(const qsa::VertexSet&)>& accept) {
  const auto dist = hop_distances(g, v);
  std::vector<qsa::Vertex> near;
  for (qsa::Vertex u = 0; u < g.order(); ++u)
    if (u != v && dist[u] <= distance) near.push_back(u);
  std::vector<qsa::VertexSet> out;
  if (two)
    for (auto a : near) {
      auto h = qsa::make_vertex_set({v, a});
      if (induced_connected(g, h) && accept(h)) out.push_back(h);
    }
  if (three)
    for (std::size_t i = 0; i < near.size(); ++i)
      for (std::size_t j = i + 1; j < near.size(); ++j) {
        auto h = qsa::make_vertex_set({v, near[i], near[j]});
        if (induced_connected(g, h) && accept(h)) out.push_back(h);
      }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace oracle

#endif
