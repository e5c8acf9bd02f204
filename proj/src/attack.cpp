#include "qsa/attack.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qsa/errors.hpp"

namespace qsa {

SearchInstance make_search_instance(Graph g, VertexSet marked, std::size_t t, MarkingScheme marking) {
  check_vertex_set(marked, g.order());
  auto p = uniform_stochastic<double>(g);
  return {std::move(g), std::move(marked), t, std::move(p), marking};
}

double expected_runtime(double t, double p, double t_pen) {
  if (!(p >= 0.0 && p <= 1.0 + 1e-12)) throw ParameterError("probability outside [0, 1]");
  if (t < 0.0 || t_pen < 0.0) throw ParameterError("negative time");
  if (p == 0.0) return infinite_runtime;
  return (t + t_pen) / p;
}

double success_probability(const SearchInstance& inst) {
  return probability_trace(inst.graph, inst.marked, inst.params, inst.t, inst.marking).back();
}

SearchInstance apply_attack(const SearchInstance& inst, const ExceptionalConfiguration& ec) {
  if (!std::binary_search(inst.marked.begin(), inst.marked.end(), ec.anchor))
    throw ParameterError("configuration is not anchored at a marked vertex");
  for (Vertex v : ec.vertices)
    if (v >= inst.graph.order()) throw ParameterError("configuration vertex out of range");
  VertexSet merged;
  std::set_union(inst.marked.begin(), inst.marked.end(), ec.vertices.begin(), ec.vertices.end(),
                 std::back_inserter(merged));
  if (merged.size() == inst.marked.size()) throw ParameterError("configuration adds no vertex to the marked set");
  SearchInstance out = inst;
  out.marked = std::move(merged);
  return out;
}

MeasurementOptimum optimize_measurement_time(SearchEvolution<double>& run, double t_pen) {
  if (t_pen < 0.0) throw ParameterError("negative penalty time");
  MeasurementOptimum best;
  for (std::size_t t = 0; static_cast<double>(t) + t_pen < best.expected_runtime; ++t) {
    const double p = run.probability(t);
    const double T = expected_runtime(static_cast<double>(t), p, t_pen);
    if (T < best.expected_runtime) best = {t, T, p};
  }
  return best;
}

MeasurementOptimum optimize_measurement_time(const Graph& g, const VertexSet& marked,
                                             const StochasticMatrix<double>& p, double t_pen,
                                             MarkingScheme marking) {
  SearchEvolution<double> run(g, marked, p, marking);
  return optimize_measurement_time(run, t_pen);
}

double attack_efficiency(double p_base, double p_attacked) {
  if (!(p_base > 0.0)) throw PreconditionError("base success probability must be positive");
  return 1.0 - p_attacked / p_base;
}

double attack_efficiency(const SearchInstance& base, const SearchInstance& attacked) {
  if (base.t != attacked.t) throw ContractViolation("attack changed the measurement time");
  if (!(base.graph == attacked.graph) || !(base.params == attacked.params) || base.marking != attacked.marking)
    throw ContractViolation("instances differ outside the marked set");
  return attack_efficiency(success_probability(base), success_probability(attacked));
}

double strong_attack_efficiency(const SearchInstance& base, const VertexSet& attacked_marked, double t_pen) {
  const double T_base = expected_runtime(static_cast<double>(base.t), success_probability(base), t_pen);
  const auto opt = optimize_measurement_time(base.graph, attacked_marked, base.params, t_pen, base.marking);
  return 1.0 - T_base / opt.expected_runtime;
}

AttackReport evaluate_attack(const Graph& g, const StochasticMatrix<double>& p, const ExceptionalConfiguration& ec,
                             double t_pen, MarkingScheme marking) {
  AttackReport r;
  r.anchor = ec.anchor;
  r.kind = ec.kind;
  r.t_pen = t_pen;
  std::copy_if(ec.vertices.begin(), ec.vertices.end(), std::back_inserter(r.added),
               [&](Vertex v) { return v != ec.anchor; });

  SearchEvolution<double> clean(g, {ec.anchor}, p, marking);
  const auto base = optimize_measurement_time(clean, t_pen);
  r.t_base = base.t;
  r.p_base = base.probability;
  r.T_base = base.expected_runtime;

  SearchEvolution<double> attacked(g, ec.vertices, p, marking);
  const auto defended = optimize_measurement_time(attacked, t_pen);
  r.t_opt = defended.t;
  r.T_opt = defended.expected_runtime;

  r.p_attacked = attacked.probability(r.t_base);
  r.T_attacked = expected_runtime(static_cast<double>(r.t_base), r.p_attacked, t_pen);
  r.eff = attack_efficiency(r.p_base, r.p_attacked);
  r.strong_eff = 1.0 - r.T_base / r.T_opt;
  return r;
}

double quantile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw ParameterError("quantile of empty sample");
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

EfficiencyStatistics efficiency_statistics(std::span<const double> values, std::span<const double> thresholds) {
  if (values.empty()) throw ParameterError("efficiency statistics need at least one sample");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  EfficiencyStatistics s;
  s.count = sorted.size();
  s.min = sorted.front();
  s.max = sorted.back();
  s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(s.count);
  s.q25 = quantile_sorted(sorted, 0.25);
  s.median = quantile_sorted(sorted, 0.5);
  s.q75 = quantile_sorted(sorted, 0.75);
  for (double e : thresholds) {
    auto above = std::count_if(sorted.begin(), sorted.end(), [e](double x) { return x >= e; });
    s.exceedance.emplace_back(e, static_cast<double>(above) / static_cast<double>(s.count));
  }
  return s;
}

EfficiencyStatistics efficiency_statistics(std::span<const AttackReport> reports, EfficiencyKind kind,
                                           std::span<const double> thresholds) {
  std::vector<double> values;
  values.reserve(reports.size());
  for (const auto& r : reports) values.push_back(kind == EfficiencyKind::Plain ? r.eff : r.strong_eff);
  return efficiency_statistics(values, thresholds);
}

}  // namespace qsa
