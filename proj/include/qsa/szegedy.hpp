#ifndef QSA_SZEGEDY_HPP_
#define QSA_SZEGEDY_HPP_

#include <cmath>
#include <memory>
#include <optional>
#include <string_view>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qsa/errors.hpp"
#include "qsa/graph.hpp"
#include "qsa/stochastic.hpp"

namespace qsa {

/// Index set of the walk's state space: ordered pairs (v, w) with w a
/// neighbour of v or w == v. Every Szegedy walk built from a stochastic
/// matrix supported on the graph (absorbed columns included) leaves the span
/// of these pairs invariant, so the n^2-dimensional space is never stored.
/// Pairs are grouped in blocks by first register v, sorted by w.
class ArcSpace {
 public:
  explicit ArcSpace(const Graph& g);

  std::size_t order() const noexcept { return offsets_.size() - 1; }
  std::size_t dimension() const noexcept { return targets_.size(); }

  Eigen::Index block_begin(Vertex v) const { return offsets_[v]; }
  Eigen::Index block_size(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  Vertex source(Eigen::Index arc) const { return sources_[arc]; }
  Vertex target(Eigen::Index arc) const { return targets_[arc]; }
  /// Index of (w, v) for the arc (v, w).
  Eigen::Index reverse(Eigen::Index arc) const { return reverse_[arc]; }
  const std::vector<Eigen::Index>& reverse_map() const noexcept { return reverse_; }

  std::optional<Eigen::Index> find(Vertex v, Vertex w) const;

 private:
  std::vector<Eigen::Index> offsets_;
  std::vector<Vertex> sources_;
  std::vector<Vertex> targets_;
  std::vector<Eigen::Index> reverse_;
};

template <class Scalar>
using Amplitudes = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Real amplitude vector over an ArcSpace.
template <class Scalar>
class WalkState {
 public:
  WalkState(std::shared_ptr<const ArcSpace> space, Amplitudes<Scalar> amplitudes)
      : space_(std::move(space)), amplitudes_(std::move(amplitudes)) {
    if (static_cast<std::size_t>(amplitudes_.size()) != space_->dimension())
      throw ContractViolation("amplitude vector does not match state space dimension");
  }

  const ArcSpace& space() const noexcept { return *space_; }
  const std::shared_ptr<const ArcSpace>& shared_space() const noexcept { return space_; }

  const Amplitudes<Scalar>& amplitudes() const noexcept { return amplitudes_; }
  Amplitudes<Scalar>& amplitudes() noexcept { return amplitudes_; }

  Scalar amplitude(Vertex v, Vertex w) const {
    auto arc = space_->find(v, w);
    return arc ? amplitudes_[*arc] : Scalar(0);
  }

  Scalar norm() const { return amplitudes_.norm(); }

  /// Embedding into the full pair space, component (v, w) at index v*n + w.
  Amplitudes<Scalar> to_dense() const {
    const auto n = static_cast<Eigen::Index>(space_->order());
    Amplitudes<Scalar> out = Amplitudes<Scalar>::Zero(n * n);
    for (Eigen::Index a = 0; a < amplitudes_.size(); ++a)
      out[space_->source(a) * n + space_->target(a)] = amplitudes_[a];
    return out;
  }

 private:
  std::shared_ptr<const ArcSpace> space_;
  Amplitudes<Scalar> amplitudes_;
};

/// How the marked set enters the walk.
///
/// PhaseFlip: R1 = Q (2 sum_v |psi_v><psi_v| - I) with psi_v built from P and
/// Q = -1 on pairs whose first register is marked; the marked blocks then
/// reflect about the orthogonal complement of psi_v.
///
/// Absorbing: R1 = 2 sum_v |psi'_v><psi'_v| - I with psi'_v built from the
/// absorbing matrix P' = absorb_marked(P, S); on the pairs reachable from the
/// initial state a marked block acts as -I.
enum class MarkingScheme { PhaseFlip, Absorbing };

/// "phase" or "absorb".
std::string_view to_string(MarkingScheme m);
MarkingScheme parse_marking(std::string_view text);

/// Szegedy walk W = R2 R1 with R2 = Swap R1 Swap.
///
/// R1 acts independently on each block of pairs sharing the first register
/// v, as the reflection 2|psi_v><psi_v| - I with
/// |psi_v> = |v> (x) sum_w sqrt(P(w,v)) |w>, optionally followed by a sign
/// flip of the block. One step costs O(dimension).
template <class Scalar>
class WalkOperator {
 public:
  /// Unmarked walk of `p`.
  WalkOperator(std::shared_ptr<const ArcSpace> space, StochasticMatrix<Scalar> p)
      : space_(std::move(space)), stochastic_(std::move(p)) {
    if (stochastic_.order() != space_->order())
      throw ContractViolation("stochastic matrix order does not match state space");
    build_projector();
    flipped_.assign(stochastic_.order(), 0);
  }

  /// Search walk for `marked` under the given scheme.
  WalkOperator(std::shared_ptr<const ArcSpace> space, const StochasticMatrix<Scalar>& p, const VertexSet& marked,
               MarkingScheme scheme)
      : WalkOperator(std::move(space), scheme == MarkingScheme::Absorbing ? absorb_marked(p, marked) : p) {
    check_vertex_set(marked, stochastic_.order());
    if (scheme == MarkingScheme::PhaseFlip)
      for (Vertex v : marked) flipped_[v] = 1;
  }

  WalkOperator(const Graph& g, StochasticMatrix<Scalar> p)
      : WalkOperator(std::make_shared<const ArcSpace>(g), std::move(p)) {}

  const ArcSpace& space() const noexcept { return *space_; }
  const std::shared_ptr<const ArcSpace>& shared_space() const noexcept { return space_; }
  /// Matrix whose columns define psi_v (P' for the absorbing scheme).
  const StochasticMatrix<Scalar>& stochastic() const noexcept { return stochastic_; }
  bool flipped(Vertex v) const { return flipped_[v] != 0; }

  void reflect_first_in_place(Amplitudes<Scalar>& x) const {
    for (Vertex v = 0; v < stochastic_.order(); ++v) {
      const Eigen::Index b = space_->block_begin(v), len = space_->block_size(v);
      auto block = x.segment(b, len);
      auto psi = projector_.segment(b, len);
      const Scalar c = Scalar(2) * psi.dot(block);
      if (flipped_[v])
        block = block - c * psi;
      else
        block = c * psi - block;
    }
  }

  void swap_registers_in_place(Amplitudes<Scalar>& x, Amplitudes<Scalar>& scratch) const {
    scratch = x(space_->reverse_map());
    x.swap(scratch);
  }

  void reflect_second_in_place(Amplitudes<Scalar>& x, Amplitudes<Scalar>& scratch) const {
    swap_registers_in_place(x, scratch);
    reflect_first_in_place(x);
    swap_registers_in_place(x, scratch);
  }

  void step_in_place(Amplitudes<Scalar>& x, Amplitudes<Scalar>& scratch) const {
    reflect_first_in_place(x);
    reflect_second_in_place(x, scratch);
  }

 private:
  void build_projector() {
    using std::sqrt;
    projector_ = Amplitudes<Scalar>::Zero(static_cast<Eigen::Index>(space_->dimension()));
    for (Vertex v = 0; v < stochastic_.order(); ++v)
      for (const auto& e : stochastic_.column(v)) {
        auto arc = space_->find(v, e.row);
        if (!arc)
          throw ParameterError("support of column " + std::to_string(v) + " leaves the neighbourhood of " +
                               std::to_string(v));
        projector_[*arc] = sqrt(e.weight);
      }
  }

  std::shared_ptr<const ArcSpace> space_;
  StochasticMatrix<Scalar> stochastic_;
  Amplitudes<Scalar> projector_;
  std::vector<char> flipped_;
};

inline constexpr double norm_drift_tolerance = 1e-8;

namespace detail {

template <class Scalar>
void check_same_space(const WalkOperator<Scalar>& w, const WalkState<Scalar>& s) {
  if (w.shared_space() != s.shared_space() && w.space().dimension() != s.space().dimension())
    throw ContractViolation("walk operator and state live on different spaces");
}

template <class Scalar>
void check_norm(Scalar before, Scalar after) {
  using std::abs;
  if (abs(after - before) > Scalar(norm_drift_tolerance) * (before > Scalar(1) ? before : Scalar(1)))
    throw NumericalStabilityError("walk state norm drifted from " + std::to_string(double(before)) + " to " +
                                  std::to_string(double(after)));
}

}  // namespace detail

/// Initial search state from the unabsorbed matrix P:
/// amplitude sqrt(P(w,v) / n) on the pair (v, w).
template <class Scalar>
WalkState<Scalar> initial_state(std::shared_ptr<const ArcSpace> space, const StochasticMatrix<Scalar>& p) {
  if (p.order() != space->order()) throw ContractViolation("stochastic matrix order does not match state space");
  using std::sqrt;
  const Scalar n = Scalar(p.order());
  Amplitudes<Scalar> amp = Amplitudes<Scalar>::Zero(static_cast<Eigen::Index>(space->dimension()));
  for (Vertex v = 0; v < p.order(); ++v)
    for (const auto& e : p.column(v)) {
      auto arc = space->find(v, e.row);
      if (!arc) throw ParameterError("support of column " + std::to_string(v) + " leaves its neighbourhood");
      amp[*arc] = sqrt(e.weight / n);
    }
  return WalkState<Scalar>(std::move(space), std::move(amp));
}

template <class Scalar>
WalkState<Scalar> initial_state(const Graph& g, const StochasticMatrix<Scalar>& p) {
  return initial_state(std::make_shared<const ArcSpace>(g), p);
}

template <class Scalar>
WalkState<Scalar> apply_walk(const WalkOperator<Scalar>& w, const WalkState<Scalar>& s) {
  detail::check_same_space(w, s);
  Amplitudes<Scalar> x = s.amplitudes(), scratch;
  w.step_in_place(x, scratch);
  WalkState<Scalar> out(s.shared_space(), std::move(x));
  detail::check_norm(s.norm(), out.norm());
  return out;
}

template <class Scalar>
WalkState<Scalar> reflect_first(const WalkOperator<Scalar>& w, const WalkState<Scalar>& s) {
  detail::check_same_space(w, s);
  Amplitudes<Scalar> x = s.amplitudes();
  w.reflect_first_in_place(x);
  return WalkState<Scalar>(s.shared_space(), std::move(x));
}

template <class Scalar>
WalkState<Scalar> reflect_second(const WalkOperator<Scalar>& w, const WalkState<Scalar>& s) {
  detail::check_same_space(w, s);
  Amplitudes<Scalar> x = s.amplitudes(), scratch;
  w.reflect_second_in_place(x, scratch);
  return WalkState<Scalar>(s.shared_space(), std::move(x));
}

/// Probability that measuring the first register lands in `marked`.
template <class Scalar>
Scalar success_probability(const WalkState<Scalar>& s, const VertexSet& marked) {
  const ArcSpace& space = s.space();
  Scalar p = 0;
  for (Vertex v : marked) {
    if (v >= space.order()) throw ParameterError("marked vertex " + std::to_string(v) + " out of range");
    p += s.amplitudes().segment(space.block_begin(v), space.block_size(v)).squaredNorm();
  }
  return p;
}

/// Incremental search run: p(t) for t = 0, 1, ... computed on demand and
/// cached, so several consumers (optimizer, fixed-time evaluation) share one
/// evolution.
template <class Scalar>
class SearchEvolution {
 public:
  SearchEvolution(const Graph& g, VertexSet marked, const StochasticMatrix<Scalar>& p,
                  MarkingScheme scheme = MarkingScheme::PhaseFlip)
      : marked_(checked(std::move(marked), g.order())),
        walk_(std::make_shared<const ArcSpace>(g), p, marked_, scheme),
        state_(initial_state(walk_.shared_space(), p)) {
    trace_.push_back(success_probability(state_, marked_));
  }

  Scalar probability(std::size_t t) {
    while (trace_.size() <= t) advance();
    return trace_[t];
  }

  /// Number of steps applied so far.
  std::size_t time() const noexcept { return trace_.size() - 1; }
  const std::vector<Scalar>& trace() const noexcept { return trace_; }
  const VertexSet& marked() const noexcept { return marked_; }
  const WalkOperator<Scalar>& walk() const noexcept { return walk_; }
  const WalkState<Scalar>& state() const noexcept { return state_; }

 private:
  static VertexSet checked(VertexSet s, std::size_t n) {
    check_vertex_set(s, n);
    return s;
  }

  void advance() {
    walk_.step_in_place(state_.amplitudes(), scratch_);
    detail::check_norm(Scalar(1), state_.norm());
    trace_.push_back(success_probability(state_, marked_));
  }

  VertexSet marked_;
  WalkOperator<Scalar> walk_;
  WalkState<Scalar> state_;
  Amplitudes<Scalar> scratch_;
  std::vector<Scalar> trace_;
};

/// p(0..t_max) for the search on (g, marked) parametrised by p.
template <class Scalar>
std::vector<Scalar> probability_trace(const Graph& g, const VertexSet& marked, const StochasticMatrix<Scalar>& p,
                                      std::size_t t_max, MarkingScheme scheme = MarkingScheme::PhaseFlip) {
  SearchEvolution<Scalar> run(g, marked, p, scheme);
  run.probability(t_max);
  return run.trace();
}

}  // namespace qsa

#endif
