#ifndef QSA_ATTACK_HPP_
#define QSA_ATTACK_HPP_

#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "qsa/ec.hpp"
#include "qsa/graph.hpp"
#include "qsa/stochastic.hpp"
#include "qsa/szegedy.hpp"

namespace qsa {

/// Szegedy spatial search on `graph` for any vertex of `marked`, measured
/// after `t` steps, parametrised by the stochastic matrix `params`.
struct SearchInstance {
  Graph graph;
  VertexSet marked;
  std::size_t t = 0;
  StochasticMatrix<double> params;
  MarkingScheme marking = MarkingScheme::PhaseFlip;

  friend bool operator==(const SearchInstance&, const SearchInstance&) = default;
};

/// Instance with the simple random walk as parametrisation.
SearchInstance make_search_instance(Graph g, VertexSet marked, std::size_t t,
                                    MarkingScheme marking = MarkingScheme::PhaseFlip);

inline constexpr double infinite_runtime = std::numeric_limits<double>::infinity();

/// (t + t_pen) / p, the expected number of steps of repeated runs until the
/// first success. p == 0 yields infinite_runtime.
double expected_runtime(double t, double p, double t_pen = 0.0);

/// Success probability p(t) of the instance.
double success_probability(const SearchInstance& inst);

/// Marks the vertices of `ec` in addition to the current marked set. Graph,
/// parametrisation and measurement time are left untouched.
/// Throws ParameterError unless the anchor is marked and `ec` adds at least
/// one vertex.
SearchInstance apply_attack(const SearchInstance& inst, const ExceptionalConfiguration& ec);

struct MeasurementOptimum {
  std::size_t t = 0;
  double expected_runtime = infinite_runtime;
  double probability = 0.0;
};

/// Global minimiser of (t + t_pen) / p(t) over integer t >= 0.
///
/// Scans t = 0, 1, ... keeping the best value B and stops once t + t_pen >= B:
/// since p <= 1, no later time can beat B. Ties resolve to the smallest t.
MeasurementOptimum optimize_measurement_time(SearchEvolution<double>& run, double t_pen);
MeasurementOptimum optimize_measurement_time(const Graph& g, const VertexSet& marked,
                                             const StochasticMatrix<double>& p, double t_pen,
                                             MarkingScheme marking = MarkingScheme::PhaseFlip);

/// 1 - p_attacked / p_base. Throws PreconditionError unless p_base > 0.
double attack_efficiency(double p_base, double p_attacked);

/// Efficiency of the attack that turned `base` into `attacked`. Both must
/// share graph, parametrisation, marking scheme and t (ContractViolation
/// otherwise).
double attack_efficiency(const SearchInstance& base, const SearchInstance& attacked);

/// 1 - T_base(t) / min_tau T_attacked(tau), the efficiency against a defender
/// who re-tunes the measurement time. The penalty enters both runtimes.
double strong_attack_efficiency(const SearchInstance& base, const VertexSet& attacked_marked, double t_pen);

/// Outcome of attacking a single-vertex search with one configuration.
struct AttackReport {
  Vertex anchor = 0;
  VertexSet added;
  EcKind kind = EcKind::Ec2Path;
  double t_pen = 0.0;
  std::size_t t_base = 0;  // optimum of the clean search; shared by both instances
  double p_base = 0.0;
  double T_base = 0.0;
  double p_attacked = 0.0;
  double T_attacked = 0.0;
  double eff = 0.0;
  std::size_t t_opt = 0;  // defender's re-tuned time on the attacked search
  double T_opt = 0.0;
  double strong_eff = 0.0;
};

/// Clean search for {ec.anchor} tuned by the optimiser, the attacked search
/// at the same time, and the attacked search re-tuned.
AttackReport evaluate_attack(const Graph& g, const StochasticMatrix<double>& p, const ExceptionalConfiguration& ec,
                             double t_pen, MarkingScheme marking = MarkingScheme::PhaseFlip);

struct EfficiencyStatistics {
  std::size_t count = 0;
  double max = 0.0;
  double min = 0.0;
  double mean = 0.0;
  double q25 = 0.0;
  double median = 0.0;
  double q75 = 0.0;
  /// (E, fraction of samples with efficiency >= E) per requested threshold.
  std::vector<std::pair<double, double>> exceedance;

  double iqr() const noexcept { return q75 - q25; }
};

/// Linear-interpolation quantile of a sorted sample.
double quantile_sorted(std::span<const double> sorted, double q);

/// Throws ParameterError on an empty sample.
EfficiencyStatistics efficiency_statistics(std::span<const double> values, std::span<const double> thresholds = {});

enum class EfficiencyKind { Plain, Strong };
EfficiencyStatistics efficiency_statistics(std::span<const AttackReport> reports, EfficiencyKind kind,
                                           std::span<const double> thresholds = {});

}  // namespace qsa

#endif
