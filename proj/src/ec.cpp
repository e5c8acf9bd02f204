#include "qsa/ec.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qsa/errors.hpp"
#include "qsa/random.hpp"

namespace qsa {

std::string_view to_string(EcKind kind) {
  switch (kind) {
    case EcKind::Ec2Path: return "2ec_path";
    case EcKind::Ec3Triangle: return "3ec_triangle";
    case EcKind::Ec3Path: return "3ec_path";
  }
  return "?";
}

namespace {

/// BFS 2-colouring of the subgraph induced by h. colour[i] is for h[i];
/// returns false on an odd cycle. `reached` counts vertices of the first
/// component.
bool two_colour(const Graph& g, const VertexSet& h, std::vector<int>& colour, std::size_t& reached) {
  colour.assign(h.size(), -1);
  auto index_of = [&](Vertex w) -> std::ptrdiff_t {
    auto it = std::lower_bound(h.begin(), h.end(), w);
    return (it != h.end() && *it == w) ? it - h.begin() : -1;
  };
  bool bipartite = true;
  std::vector<std::size_t> queue{0};
  colour[0] = 0;
  reached = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t i = queue[head];
    for (Vertex w : g.neighbors(h[i])) {
      auto j = index_of(w);
      if (j < 0) continue;
      if (colour[j] < 0) {
        colour[j] = 1 - colour[i];
        ++reached;
        queue.push_back(static_cast<std::size_t>(j));
      } else if (colour[j] == colour[i]) {
        bipartite = false;
      }
    }
  }
  return bipartite;
}

void check_subset(const Graph& g, const VertexSet& h) {
  if (h.empty()) throw PreconditionError("empty vertex set");
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] >= g.order()) throw PreconditionError("vertex out of range");
    if (i > 0 && h[i - 1] >= h[i]) throw PreconditionError("vertex set not sorted and unique");
  }
}

}  // namespace

bool induced_bipartite(const Graph& g, const VertexSet& h) {
  check_subset(g, h);
  std::vector<int> colour;
  std::size_t reached = 0;
  bool ok = two_colour(g, h, colour, reached);
  // Remaining components, if any.
  VertexSet rest;
  for (std::size_t i = 0; i < h.size(); ++i)
    if (colour[i] < 0) rest.push_back(h[i]);
  return ok && (rest.empty() || induced_bipartite(g, rest));
}

bool is_exceptional(const Graph& g, const VertexSet& h) {
  check_subset(g, h);
  std::vector<int> colour;
  std::size_t reached = 0;
  bool bipartite = two_colour(g, h, colour, reached);
  if (reached != h.size()) throw PreconditionError("vertex set does not induce a connected subgraph");
  if (!bipartite) return true;
  std::size_t side[2] = {0, 0};
  for (std::size_t i = 0; i < h.size(); ++i) side[colour[i]] += g.degree(h[i]);
  return side[0] == side[1];
}

std::vector<ExceptionalConfiguration> find_2ec(const Graph& g, Vertex v) {
  if (v >= g.order()) throw ParameterError("vertex out of range");
  std::vector<ExceptionalConfiguration> out;
  for (Vertex w : g.neighbors(v)) {
    VertexSet h = make_vertex_set({v, w});
    if (is_exceptional(g, h)) out.push_back({std::move(h), EcKind::Ec2Path, v});
  }
  return out;
}

std::vector<ExceptionalConfiguration> find_3ec(const Graph& g, Vertex v) {
  if (v >= g.order()) throw ParameterError("vertex out of range");
  std::vector<VertexSet> candidates;
  auto nb = g.neighbors(v);
  // Both other vertices adjacent to v: triangles and paths with v in the middle.
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j) candidates.push_back(make_vertex_set({v, nb[i], nb[j]}));
  // v at the end of an induced path v-b-c.
  for (Vertex b : nb)
    for (Vertex c : g.neighbors(b))
      if (c != v && !g.adjacent(v, c)) candidates.push_back(make_vertex_set({v, b, c}));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<ExceptionalConfiguration> out;
  for (auto& h : candidates) {
    if (!is_exceptional(g, h)) continue;
    bool triangle = g.adjacent(h[0], h[1]) && g.adjacent(h[0], h[2]) && g.adjacent(h[1], h[2]);
    out.push_back({std::move(h), triangle ? EcKind::Ec3Triangle : EcKind::Ec3Path, v});
  }
  return out;
}

OrderSet OrderSet::parse(std::string_view text) {
  OrderSet out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (token == "2") out.two = true;
    else if (token == "3") out.three = true;
    else throw ParameterError("unsupported configuration order '" + std::string(token) + "' (expected 2 or 3)");
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<ExceptionalConfiguration> find_ec_within_distance(const Graph& g, Vertex v, std::size_t distance,
                                                               OrderSet orders) {
  if (distance != 1 && distance != 2) throw ParameterError("distance must be 1 or 2");
  if (v >= g.order()) throw ParameterError("vertex out of range");
  auto near = [&](Vertex w) {
    if (w == v || g.adjacent(v, w)) return true;
    if (distance < 2) return false;
    for (Vertex b : g.neighbors(v))
      if (g.adjacent(b, w)) return true;
    return false;
  };
  std::vector<ExceptionalConfiguration> out;
  auto keep = [&](std::vector<ExceptionalConfiguration> found) {
    for (auto& ec : found)
      if (std::all_of(ec.vertices.begin(), ec.vertices.end(), near)) out.push_back(std::move(ec));
  };
  if (orders.two) keep(find_2ec(g, v));
  if (orders.three) keep(find_3ec(g, v));
  return out;
}

std::pair<double, double> wilson_interval(std::size_t hits, std::size_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / n;
  const double z2 = z * z;
  const double centre = (p + z2 / (2 * n)) / (1 + z2 / n);
  const double half = z / (1 + z2 / n) * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
  // Exact bounds at the ends, where rounding could exclude p itself.
  const double lo = hits == 0 ? 0.0 : std::max(0.0, centre - half);
  const double hi = hits == trials ? 1.0 : std::min(1.0, centre + half);
  return {lo, hi};
}

FormationSample ec_formation_sample(const ModelParams& model, std::size_t n, std::span<const FormationPanel> panels,
                                    std::uint64_t sample_seed) {
  SampledGraph sg = sample_connected(model, n, derive_seed(sample_seed, {0}));
  Rng rng(derive_seed(sample_seed, {1}));
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  const Vertex v = pick(rng);

  FormationSample out;
  out.regenerations = sg.regenerations;
  for (const auto& panel : panels)
    out.hit.push_back(!find_ec_within_distance(sg.graph, v, panel.distance, panel.orders).empty());
  return out;
}

std::vector<FormationEstimate> aggregate_formation(std::span<const FormationSample> samples, std::size_t panels,
                                                   std::uint64_t seed) {
  std::vector<FormationEstimate> out(panels);
  for (std::size_t k = 0; k < panels; ++k) {
    auto& est = out[k];
    est.samples = samples.size();
    est.seed = seed;
    for (const auto& s : samples) {
      est.hits += s.hit.at(k) ? 1 : 0;
      est.regenerations += s.regenerations;
    }
    if (est.samples == 0) throw ParameterError("at least one sample required");
    est.probability = static_cast<double>(est.hits) / static_cast<double>(est.samples);
    std::tie(est.ci_low, est.ci_high) = wilson_interval(est.hits, est.samples);
  }
  return out;
}

std::vector<FormationEstimate> ec_formation_scan(const ModelParams& model, std::size_t n,
                                                 std::span<const FormationPanel> panels, std::size_t samples,
                                                 std::uint64_t seed) {
  if (samples == 0) throw ParameterError("at least one sample required");
  std::vector<FormationSample> drawn;
  drawn.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i)
    drawn.push_back(ec_formation_sample(model, n, panels, derive_seed(seed, {i})));
  return aggregate_formation(drawn, panels.size(), seed);
}

FormationEstimate ec_formation_probability(const ModelParams& model, std::size_t n, OrderSet orders,
                                           std::size_t distance, std::size_t samples, std::uint64_t seed) {
  const FormationPanel panel{"", orders, distance};
  return ec_formation_scan(model, n, std::span(&panel, 1), samples, seed).front();
}

}  // namespace qsa
