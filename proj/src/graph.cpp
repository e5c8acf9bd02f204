#include "qsa/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <set>
#include <string>

#include "qsa/errors.hpp"
#include "qsa/random.hpp"

namespace qsa {

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

void check_vertex_set(const VertexSet& s, std::size_t n) {
  if (s.empty()) throw ParameterError("vertex set is empty");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= n) throw ParameterError("vertex " + std::to_string(s[i]) + " out of range");
    if (i > 0 && s[i - 1] >= s[i]) throw ParameterError("vertex set not sorted and unique");
  }
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adjacency_.resize(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw ParameterError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                           ") out of range for n = " + std::to_string(n));
    if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& nb = g.adjacency_[v];
    std::sort(nb.begin(), nb.end());
    auto dup = std::adjacent_find(nb.begin(), nb.end());
    if (dup != nb.end())
      throw ParameterError("duplicate edge (" + std::to_string(std::min<Vertex>(v, *dup)) + ", " +
                           std::to_string(std::max<Vertex>(v, *dup)) + ")");
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void validate(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t half_edges = 0;
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    half_edges += nb.size();
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] >= n) throw ParameterError("neighbor id out of range at vertex " + std::to_string(v));
      if (nb[i] == v) throw ParameterError("self-loop at vertex " + std::to_string(v));
      if (i > 0 && nb[i - 1] >= nb[i])
        throw ParameterError("adjacency of vertex " + std::to_string(v) + " not strictly sorted");
      if (!g.adjacent(nb[i], v))
        throw ParameterError("asymmetric edge (" + std::to_string(v) + ", " + std::to_string(nb[i]) + ")");
    }
  }
  if (half_edges != 2 * g.size()) throw ParameterError("edge count does not match adjacency");
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ParameterError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edges(n, e);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, e);
}

// ---------------------------------------------------------------------------

std::string_view to_string(Model m) {
  switch (m) {
    case Model::ErdosRenyi: return "er";
    case Model::WattsStrogatz: return "ws";
    case Model::BarabasiAlbert: return "ba";
  }
  return "?";
}

Model parse_model(std::string_view name) {
  if (name == "er") return Model::ErdosRenyi;
  if (name == "ws") return Model::WattsStrogatz;
  if (name == "ba") return Model::BarabasiAlbert;
  throw ParameterError("unknown model '" + std::string(name) + "' (expected er, ws or ba)");
}

double default_er_probability(std::size_t n) {
  return 2.0 * std::log(static_cast<double>(n)) / static_cast<double>(n);
}

std::size_t default_ws_degree(std::size_t n) {
  auto k = static_cast<std::size_t>(std::ceil(2.0 * std::log(static_cast<double>(n))));
  if (k % 2 != 0) ++k;
  std::size_t cap = (n - 1) % 2 == 0 ? n - 1 : n - 2;
  return std::max<std::size_t>(2, std::min(k, cap));
}

ModelParams default_params(Model m, std::size_t n, std::uint64_t seed) {
  ModelParams p;
  p.model = m;
  p.er_p = default_er_probability(n);
  p.ws_k = default_ws_degree(n);
  p.ws_beta = default_ws_beta;
  p.ba_m0 = default_ba_attachment;
  p.seed = seed;
  return p;
}

void validate(const ModelParams& params, std::size_t n) {
  switch (params.model) {
    case Model::ErdosRenyi:
      if (n < 2) throw ParameterError("Erdos-Renyi needs n >= 2");
      if (!(params.er_p >= 0.0 && params.er_p <= 1.0)) throw ParameterError("edge probability outside [0, 1]");
      break;
    case Model::WattsStrogatz:
      if (params.ws_k % 2 != 0) throw ParameterError("Watts-Strogatz degree K must be even");
      if (params.ws_k < 2 || params.ws_k >= n) throw ParameterError("Watts-Strogatz degree K must satisfy 2 <= K < n");
      if (!(params.ws_beta >= 0.0 && params.ws_beta <= 1.0))
        throw ParameterError("rewiring probability outside [0, 1]");
      break;
    case Model::BarabasiAlbert:
      if (params.ba_m0 < 1 || params.ba_m0 >= n) throw ParameterError("attachment count must satisfy 1 <= m0 < n");
      break;
  }
}

namespace {

std::vector<Edge> to_edges(const std::vector<std::set<Vertex>>& adj) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < adj.size(); ++u)
    for (Vertex v : adj[u])
      if (u < v) e.emplace_back(u, v);
  return e;
}

}  // namespace

Graph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  validate(ModelParams{.model = Model::ErdosRenyi, .er_p = p}, n);
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (unit(rng) < p) e.emplace_back(u, v);
  Graph g = Graph::from_edges(n, e);
  validate(g);
  return g;
}

Graph gen_watts_strogatz(std::size_t n, std::size_t k, double beta, std::uint64_t seed) {
  validate(ModelParams{.model = Model::WattsStrogatz, .ws_k = k, .ws_beta = beta}, n);
  std::vector<std::set<Vertex>> adj(n);
  for (Vertex u = 0; u < n; ++u)
    for (std::size_t j = 1; j <= k / 2; ++j) {
      auto v = static_cast<Vertex>((u + j) % n);
      adj[u].insert(v);
      adj[v].insert(u);
    }

  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  for (std::size_t j = 1; j <= k / 2; ++j) {
    for (Vertex u = 0; u < n; ++u) {
      auto v = static_cast<Vertex>((u + j) % n);
      if (unit(rng) >= beta) continue;
      // u already adjacent to everything: nothing to rewire to.
      if (adj[u].size() >= n - 1) continue;
      Vertex w = pick(rng);
      while (w == u || adj[u].count(w)) w = pick(rng);
      adj[u].erase(v);
      adj[v].erase(u);
      adj[u].insert(w);
      adj[w].insert(u);
    }
  }
  Graph g = Graph::from_edges(n, to_edges(adj));
  validate(g);
  return g;
}

Graph gen_barabasi_albert(std::size_t n, std::size_t m0, std::uint64_t seed) {
  validate(ModelParams{.model = Model::BarabasiAlbert, .ba_m0 = m0}, n);
  std::vector<Edge> e;
  // Each vertex appears once per incident edge end, so a uniform draw from
  // this list is a degree-proportional draw.
  std::vector<Vertex> endpoints;
  for (Vertex u = 0; u <= m0; ++u)
    for (Vertex v = u + 1; v <= m0; ++v) {
      e.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }

  Rng rng(seed);
  std::vector<Vertex> targets;
  for (auto v = static_cast<Vertex>(m0 + 1); v < n; ++v) {
    targets.clear();
    std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
    while (targets.size() < m0) {
      Vertex w = endpoints[pick(rng)];
      if (std::find(targets.begin(), targets.end(), w) == targets.end()) targets.push_back(w);
    }
    for (Vertex w : targets) {
      e.emplace_back(w, v);
      endpoints.push_back(w);
      endpoints.push_back(v);
    }
  }
  Graph g = Graph::from_edges(n, e);
  validate(g);
  return g;
}

Graph generate(const ModelParams& params, std::size_t n) {
  switch (params.model) {
    case Model::ErdosRenyi: return gen_erdos_renyi(n, params.er_p, params.seed);
    case Model::WattsStrogatz: return gen_watts_strogatz(n, params.ws_k, params.ws_beta, params.seed);
    case Model::BarabasiAlbert: return gen_barabasi_albert(n, params.ba_m0, params.seed);
  }
  throw ParameterError("unknown model");
}

SampledGraph sample_connected(ModelParams params, std::size_t n, std::uint64_t seed, std::size_t max_attempts) {
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    params.seed = derive_seed(seed, {attempt});
    Graph g = generate(params, n);
    if (is_connected(g)) return {std::move(g), attempt};
  }
  throw DegenerateInputError("no connected " + std::string(to_string(params.model)) + " graph on " +
                             std::to_string(n) + " vertices after " + std::to_string(max_attempts) + " draws");
}

}  // namespace qsa
