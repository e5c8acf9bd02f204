#ifndef QSA_EC_HPP_
#define QSA_EC_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsa/graph.hpp"

namespace qsa {

enum class EcKind { Ec2Path, Ec3Triangle, Ec3Path };

/// "2ec_path", "3ec_triangle", "3ec_path".
std::string_view to_string(EcKind kind);

/// A connected marked set admitting a stationary state of the search walk.
struct ExceptionalConfiguration {
  VertexSet vertices;
  EcKind kind = EcKind::Ec2Path;
  Vertex anchor = 0;

  std::size_t order() const noexcept { return vertices.size(); }
  friend bool operator==(const ExceptionalConfiguration&, const ExceptionalConfiguration&) = default;
};

/// True iff the subgraph induced by `h` is bipartite.
/// Throws PreconditionError if `h` is empty or out of range.
bool induced_bipartite(const Graph& g, const VertexSet& h);

/// True iff the subgraph induced by `h` is non-bipartite, or bipartite with
/// parts whose degree sums (degrees taken in g, not in the subgraph) agree.
/// Throws PreconditionError if `h` does not induce a connected subgraph.
bool is_exceptional(const Graph& g, const VertexSet& h);

/// Adjacent pairs {v, w} with deg(w) == deg(v), ascending in w.
std::vector<ExceptionalConfiguration> find_2ec(const Graph& g, Vertex v);

/// Triangles through v and induced paths a-b-c through v with
/// deg(b) == deg(a) + deg(c), ordered by vertex set.
std::vector<ExceptionalConfiguration> find_3ec(const Graph& g, Vertex v);

/// Subset of {2, 3}.
struct OrderSet {
  bool two = false;
  bool three = false;

  /// Parses "2", "3", "2,3".
  static OrderSet parse(std::string_view text);
  friend bool operator==(const OrderSet&, const OrderSet&) = default;
};

/// Configurations of the requested orders containing v whose other vertices
/// all lie within `distance` hops of v. distance must be 1 or 2.
std::vector<ExceptionalConfiguration> find_ec_within_distance(const Graph& g, Vertex v, std::size_t distance,
                                                               OrderSet orders);

/// One estimation target of a formation scan.
struct FormationPanel {
  std::string label;
  OrderSet orders;
  std::size_t distance = 2;
};

struct FormationEstimate {
  double probability = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::size_t samples = 0;
  std::size_t hits = 0;
  std::size_t regenerations = 0;  // disconnected graphs discarded
  std::uint64_t seed = 0;
};

/// Wilson score interval for a binomial proportion (95% by default).
std::pair<double, double> wilson_interval(std::size_t hits, std::size_t trials, double z = 1.959963984540054);

struct FormationSample {
  std::vector<char> hit;  // one flag per panel
  std::size_t regenerations = 0;
};

/// One draw: a connected graph from the model and a uniformly random vertex,
/// both derived from `sample_seed`.
FormationSample ec_formation_sample(const ModelParams& model, std::size_t n, std::span<const FormationPanel> panels,
                                    std::uint64_t sample_seed);

/// Aggregates panel hits of samples into estimates. `seed` is recorded.
std::vector<FormationEstimate> aggregate_formation(std::span<const FormationSample> samples, std::size_t panels,
                                                   std::uint64_t seed);

/// Sample i uses the seed derive_seed(seed, {i}).
std::vector<FormationEstimate> ec_formation_scan(const ModelParams& model, std::size_t n,
                                                 std::span<const FormationPanel> panels, std::size_t samples,
                                                 std::uint64_t seed);

FormationEstimate ec_formation_probability(const ModelParams& model, std::size_t n, OrderSet orders,
                                           std::size_t distance, std::size_t samples, std::uint64_t seed);

}  // namespace qsa

#endif
