#ifndef QSA_GRAPH_HPP_
#define QSA_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace qsa {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free sequence of vertex ids.
using VertexSet = std::vector<Vertex>;

VertexSet make_vertex_set(std::vector<Vertex> vertices);

/// Throws ParameterError unless `s` is nonempty, strictly increasing and
/// every id is below n.
void check_vertex_set(const VertexSet& s, std::size_t n);

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built; every constructor path enforces simplicity and
/// symmetry.
class Graph {
 public:
  Graph() = default;

  /// Throws ParameterError on self-loops, duplicate edges or ids >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Independent invariant check (simple, undirected, ids in range, sorted).
/// Throws ParameterError describing the first violation.
void validate(const Graph& g);

bool is_connected(const Graph& g);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// Star with centre 0 and `leaves` leaves.
Graph star_graph(std::size_t leaves);

// ---------------------------------------------------------------------------
// Random graph models

enum class Model { ErdosRenyi, WattsStrogatz, BarabasiAlbert };

/// Short names "er", "ws", "ba".
std::string_view to_string(Model m);
Model parse_model(std::string_view name);

struct ModelParams {
  Model model = Model::ErdosRenyi;
  double er_p = 0.0;
  std::size_t ws_k = 2;
  double ws_beta = 0.5;
  std::size_t ba_m0 = 3;
  std::uint64_t seed = 0;
};

/// p = 2 ln(n) / n.
double default_er_probability(std::size_t n);
/// ceil(2 ln n), raised to the next even integer and capped at the largest
/// even value below n.
std::size_t default_ws_degree(std::size_t n);
inline constexpr double default_ws_beta = 0.5;
inline constexpr std::size_t default_ba_attachment = 3;

ModelParams default_params(Model m, std::size_t n, std::uint64_t seed);
void validate(const ModelParams& params, std::size_t n);

Graph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed);
Graph gen_watts_strogatz(std::size_t n, std::size_t k, double beta, std::uint64_t seed);
Graph gen_barabasi_albert(std::size_t n, std::size_t m0, std::uint64_t seed);
Graph generate(const ModelParams& params, std::size_t n);

struct SampledGraph {
  Graph graph;
  std::size_t regenerations = 0;  // disconnected draws discarded before this one
};

/// Draws from the model until the result is connected. Attempt k uses the
/// seed derive_seed(seed, {k}); throws after `max_attempts` failures.
SampledGraph sample_connected(ModelParams params, std::size_t n, std::uint64_t seed,
                              std::size_t max_attempts = 1000);

// ---------------------------------------------------------------------------
// Edge-list files: "n <count>" header, then one "u v" pair per line.

Graph parse_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list(const Graph& g, const std::filesystem::path& path);

}  // namespace qsa

#endif
