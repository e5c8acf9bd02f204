#include "qsa/szegedy.hpp"

#include <algorithm>

namespace qsa {

std::string_view to_string(MarkingScheme m) {
  return m == MarkingScheme::PhaseFlip ? "phase" : "absorb";
}

MarkingScheme parse_marking(std::string_view text) {
  if (text == "phase") return MarkingScheme::PhaseFlip;
  if (text == "absorb") return MarkingScheme::Absorbing;
  throw ParameterError("unknown marking scheme '" + std::string(text) + "' (expected phase or absorb)");
}

ArcSpace::ArcSpace(const Graph& g) {
  const std::size_t n = g.order();
  offsets_.reserve(n + 1);
  offsets_.push_back(0);
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    auto self = std::lower_bound(nb.begin(), nb.end(), v);
    targets_.insert(targets_.end(), nb.begin(), self);
    targets_.push_back(v);
    targets_.insert(targets_.end(), self, nb.end());
    sources_.insert(sources_.end(), nb.size() + 1, v);
    offsets_.push_back(static_cast<Eigen::Index>(targets_.size()));
  }
  reverse_.resize(targets_.size());
  for (Eigen::Index a = 0; a < static_cast<Eigen::Index>(targets_.size()); ++a)
    reverse_[a] = *find(targets_[a], sources_[a]);
}

std::optional<Eigen::Index> ArcSpace::find(Vertex v, Vertex w) const {
  if (v >= order()) return std::nullopt;
  auto first = targets_.begin() + offsets_[v];
  auto last = targets_.begin() + offsets_[v + 1];
  auto it = std::lower_bound(first, last, w);
  if (it == last || *it != w) return std::nullopt;
  return static_cast<Eigen::Index>(it - targets_.begin());
}

}  // namespace qsa
