#include "qsa/experiment.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <ostream>
#include <random>
#include <tuple>

#include "qsa/csv.hpp"
#include "qsa/errors.hpp"
#include "qsa/parallel.hpp"
#include "qsa/random.hpp"

namespace qsa {

namespace {

std::size_t parse_count(std::string_view text, const char* what) {
  std::size_t v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty())
    throw ParameterError(std::string("bad ") + what + " '" + std::string(text) + "'");
  return v;
}

}  // namespace

NGrid NGrid::parse(std::string_view text) {
  NGrid g;
  auto first = text.find(':');
  if (first == std::string_view::npos) {
    g.start = g.stop = parse_count(text, "grid value");
    g.step = 1;
    return g;
  }
  auto second = text.find(':', first + 1);
  if (second == std::string_view::npos) throw ParameterError("grid must be start:stop:step");
  g.start = parse_count(text.substr(0, first), "grid start");
  g.stop = parse_count(text.substr(first + 1, second - first - 1), "grid stop");
  g.step = parse_count(text.substr(second + 1), "grid step");
  if (g.step == 0) throw ParameterError("grid step must be positive");
  if (g.stop < g.start) throw ParameterError("grid stop below start");
  return g;
}

std::vector<std::size_t> NGrid::values() const {
  std::vector<std::size_t> out;
  for (std::size_t n = start; n <= stop; n += step) out.push_back(n);
  return out;
}

PenaltyRule PenaltyRule::parse(std::string_view text) {
  if (text == "log") return {};
  double v = parse_double(text);
  if (!(v >= 0.0) || !std::isfinite(v)) throw ParameterError("penalty time must be non-negative");
  return {v};
}

double PenaltyRule::operator()(std::size_t n) const {
  return fixed ? *fixed : std::ceil(std::log(static_cast<double>(n)));
}

std::string PenaltyRule::describe() const { return fixed ? format_double(*fixed) : "ceil(ln n)"; }

ModelParams model_params(Model m, std::size_t n, const ModelOverrides& o, std::uint64_t seed) {
  ModelParams p = default_params(m, n, seed);
  if (o.er_p) p.er_p = *o.er_p;
  if (o.ws_k) p.ws_k = *o.ws_k;
  if (o.ws_beta) p.ws_beta = *o.ws_beta;
  if (o.ba_m0) p.ba_m0 = *o.ba_m0;
  return p;
}

std::vector<FormationPanel> default_formation_panels() {
  return {
      {"order2_d2", OrderSet{.two = true}, 2},
      {"order23_d2", OrderSet{.two = true, .three = true}, 2},
      {"order23_d1", OrderSet{.two = true, .three = true}, 1},
  };
}

ExperimentConfig default_config(Experiment e) {
  ExperimentConfig c;
  c.experiment = e;
  if (e == Experiment::Fig1) {
    c.n_grid = {100, 1000, 100};
    c.samples_per_n = 50;
  } else {
    c.n_grid = {100, 800, 100};
    c.samples_per_n = 20;
  }
  return c;
}

void validate(const ExperimentConfig& c) {
  if (c.models.empty()) throw ParameterError("no model selected");
  if (c.samples_per_n < 1) throw ParameterError("samples per n must be at least 1");
  auto grid = c.n_grid.values();
  if (grid.empty()) throw ParameterError("empty n grid");
  for (std::size_t n : grid) {
    if (n < 4) throw ParameterError("graph order must be at least 4");
    for (Model m : c.models) validate(model_params(m, n, c.overrides), n);
  }
  if (c.experiment == Experiment::Fig1 && c.panels.empty()) throw ParameterError("no formation panel");
}

std::uint64_t model_index(Model m) { return static_cast<std::uint64_t>(m); }

// ---------------------------------------------------------------------------

std::vector<FormationRow> run_fig1(const ExperimentConfig& config) {
  validate(config);
  struct Task {
    Model model;
    std::size_t n;
    std::uint64_t row_seed;
    std::size_t sample;
  };
  std::vector<Task> tasks;
  for (Model m : config.models)
    for (std::size_t n : config.n_grid.values()) {
      const auto row_seed = derive_seed(config.root_seed, {model_index(m), n});
      for (std::size_t i = 0; i < config.samples_per_n; ++i) tasks.push_back({m, n, row_seed, i});
    }

  auto samples = parallel_map(tasks.size(), config.workers, [&](std::size_t k) {
    const Task& t = tasks[k];
    return ec_formation_sample(model_params(t.model, t.n, config.overrides), t.n, config.panels,
                               derive_seed(t.row_seed, {t.sample}));
  });

  std::vector<FormationRow> rows;
  for (std::size_t k = 0; k < tasks.size(); k += config.samples_per_n) {
    std::span<const FormationSample> chunk(samples.data() + k, config.samples_per_n);
    auto estimates = aggregate_formation(chunk, config.panels.size(), tasks[k].row_seed);
    for (std::size_t p = 0; p < config.panels.size(); ++p)
      rows.push_back({tasks[k].model, tasks[k].n, config.panels[p].label, estimates[p]});
  }
  return rows;
}

void write_fig1_csv(std::span<const FormationRow> rows, std::ostream& out) {
  out << "model,n,panel,probability,ci_low,ci_high,samples,seed\n";
  for (const auto& r : rows)
    out << to_string(r.model) << ',' << r.n << ',' << r.panel << ',' << format_double(r.estimate.probability) << ','
        << format_double(r.estimate.ci_low) << ',' << format_double(r.estimate.ci_high) << ',' << r.estimate.samples
        << ',' << r.estimate.seed << '\n';
}

// ---------------------------------------------------------------------------

AttackRecord run_attack_sample(Model model, std::size_t n, std::uint64_t sample_seed, double t_pen,
                               const ModelOverrides& overrides, MarkingScheme marking) {
  constexpr std::size_t max_graphs = 1000;
  AttackRecord rec;
  rec.model = model;
  rec.n = n;
  rec.seed = sample_seed;
  const ModelParams params = model_params(model, n, overrides);

  for (std::size_t k = 0; k < max_graphs; ++k) {
    SampledGraph sg = sample_connected(params, n, derive_seed(sample_seed, {0, k}));
    rec.regenerations += sg.regenerations;
    Rng rng(derive_seed(sample_seed, {1, k}));
    std::uniform_int_distribution<Vertex> pick_vertex(0, static_cast<Vertex>(n - 1));
    for (std::size_t attempt = 0; attempt < n; ++attempt) {
      const Vertex v = pick_vertex(rng);
      auto ecs = find_2ec(sg.graph, v);
      if (ecs.empty()) {
        ++rec.anchor_resamples;
        continue;
      }
      std::uniform_int_distribution<std::size_t> pick_ec(0, ecs.size() - 1);
      const auto& ec = ecs[pick_ec(rng)];
      rec.report = evaluate_attack(sg.graph, uniform_stochastic<double>(sg.graph), ec, t_pen, marking);
      return rec;
    }
    ++rec.graph_resamples;
  }
  throw DegenerateInputError("no graph with a 2EC found for " + std::string(to_string(model)) +
                             " n = " + std::to_string(n));
}

std::vector<AttackRecord> run_fig2(const ExperimentConfig& config) {
  validate(config);
  struct Task {
    Model model;
    std::size_t n;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (Model m : config.models)
    for (std::size_t n : config.n_grid.values())
      for (std::size_t i = 0; i < config.samples_per_n; ++i)
        tasks.push_back({m, n, derive_seed(config.root_seed, {model_index(m), n, i})});

  return parallel_map(tasks.size(), config.workers, [&](std::size_t k) {
    const Task& t = tasks[k];
    return run_attack_sample(t.model, t.n, t.seed, config.t_pen(t.n), config.overrides, config.marking);
  });
}

namespace {

constexpr const char* fig2_header =
    "model,n,seed,anchor,added_vertices,kind,t_base,p_base,T_base,p_attacked,T_attacked,eff,t_opt,T_opt,"
    "strong_eff,t_pen";

EcKind parse_kind(std::string_view s) {
  for (EcKind k : {EcKind::Ec2Path, EcKind::Ec3Triangle, EcKind::Ec3Path})
    if (to_string(k) == s) return k;
  throw ParameterError("unknown configuration kind '" + std::string(s) + "'");
}

}  // namespace

void write_attack_header(std::ostream& out) { out << fig2_header << '\n'; }

void write_attack_row(std::string_view model, std::size_t n, std::uint64_t seed, const AttackReport& r,
                      std::ostream& out) {
  out << model << ',' << n << ',' << seed << ',' << r.anchor << ',' << format_vertices(r.added) << ','
      << to_string(r.kind) << ',' << r.t_base << ',' << format_double(r.p_base) << ',' << format_double(r.T_base)
      << ',' << format_double(r.p_attacked) << ',' << format_double(r.T_attacked) << ',' << format_double(r.eff)
      << ',' << r.t_opt << ',' << format_double(r.T_opt) << ',' << format_double(r.strong_eff) << ','
      << format_double(r.t_pen) << '\n';
}

void write_fig2_csv(std::span<const AttackRecord> records, std::ostream& out) {
  write_attack_header(out);
  for (const auto& rec : records) write_attack_row(to_string(rec.model), rec.n, rec.seed, rec.report, out);
}

std::vector<AttackRecord> read_fig2_csv(std::istream& in) {
  CsvTable t = read_csv(in);
  auto col = [&](const char* name) { return t.column(name); };
  const std::size_t c_model = col("model"), c_n = col("n"), c_seed = col("seed"), c_anchor = col("anchor"),
                    c_added = col("added_vertices"), c_kind = col("kind"), c_tb = col("t_base"),
                    c_pb = col("p_base"), c_Tb = col("T_base"), c_pa = col("p_attacked"), c_Ta = col("T_attacked"),
                    c_eff = col("eff"), c_to = col("t_opt"), c_To = col("T_opt"), c_se = col("strong_eff"),
                    c_pen = col("t_pen");
  std::vector<AttackRecord> out;
  for (const auto& row : t.rows) {
    AttackRecord rec;
    rec.model = parse_model(row[c_model]);
    rec.n = parse_count(row[c_n], "n");
    rec.seed = parse_count(row[c_seed], "seed");
    auto& r = rec.report;
    r.anchor = static_cast<Vertex>(parse_count(row[c_anchor], "anchor"));
    r.added = parse_vertices(row[c_added]);
    r.kind = parse_kind(row[c_kind]);
    r.t_base = parse_count(row[c_tb], "t_base");
    r.p_base = parse_double(row[c_pb]);
    r.T_base = parse_double(row[c_Tb]);
    r.p_attacked = parse_double(row[c_pa]);
    r.T_attacked = parse_double(row[c_Ta]);
    r.eff = parse_double(row[c_eff]);
    r.t_opt = parse_count(row[c_to], "t_opt");
    r.T_opt = parse_double(row[c_To]);
    r.strong_eff = parse_double(row[c_se]);
    r.t_pen = parse_double(row[c_pen]);
    out.push_back(std::move(rec));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<ExponentRow> run_fig3(std::span<const AttackRecord> records) {
  std::vector<Model> order;
  for (const auto& r : records)
    if (std::find(order.begin(), order.end(), r.model) == order.end()) order.push_back(r.model);

  std::vector<ExponentRow> rows;
  for (Model m : order) {
    std::vector<std::pair<std::size_t, double>> ref, att, def;
    for (const auto& r : records) {
      if (r.model != m) continue;
      ref.emplace_back(r.n, r.report.T_base);
      att.emplace_back(r.n, r.report.T_attacked);
      def.emplace_back(r.n, r.report.T_opt);
    }
    rows.push_back({m, "reference", fit_power_law_by_order(ref)});
    rows.push_back({m, "attacked", fit_power_law_by_order(att)});
    rows.push_back({m, "defended", fit_power_law_by_order(def)});
  }
  return rows;
}

std::vector<ExponentRow> run_fig3(const ExperimentConfig& config) {
  if (config.n_grid.values().size() < 3) throw RegressionError("exponent fit needs at least 3 grid points");
  auto records = run_fig2(config);
  return run_fig3(records);
}

void write_fig3_csv(std::span<const ExponentRow> rows, std::ostream& out) {
  out << "model,variant,alpha,intercept,rse,points\n";
  for (const auto& r : rows)
    out << to_string(r.model) << ',' << r.variant << ',' << format_double(r.fit.alpha) << ','
        << format_double(r.fit.intercept) << ',' << format_double(r.fit.rse) << ',' << r.fit.points << '\n';
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::pair<std::string, std::string>> common_metadata(const ExperimentConfig& c) {
  std::string models;
  for (Model m : c.models) models += (models.empty() ? "" : ",") + std::string(to_string(m));
  return {
      {"root_seed", std::to_string(c.root_seed)},
      {"models", models},
      {"n_grid", std::to_string(c.n_grid.start) + ":" + std::to_string(c.n_grid.stop) + ":" +
                     std::to_string(c.n_grid.step)},
      {"samples_per_n", std::to_string(c.samples_per_n)},
      {"connectivity_policy", "regenerate disconnected graphs"},
  };
}

}  // namespace

std::vector<std::pair<std::string, std::string>> fig1_metadata(const ExperimentConfig& config,
                                                               std::span<const FormationRow> rows) {
  auto meta = common_metadata(config);
  for (const auto& p : config.panels)
    meta.emplace_back("panel." + p.label, std::string(p.orders.two ? "2" : "") +
                                               (p.orders.two && p.orders.three ? "," : "") +
                                               (p.orders.three ? "3" : "") + " within " +
                                               std::to_string(p.distance) + " hops");
  for (std::size_t i = 0; i < rows.size(); i += config.panels.size())
    meta.emplace_back("regenerations." + std::string(to_string(rows[i].model)) + "." + std::to_string(rows[i].n),
                      std::to_string(rows[i].estimate.regenerations));
  return meta;
}

std::vector<std::pair<std::string, std::string>> fig2_metadata(const ExperimentConfig& config,
                                                               std::span<const AttackRecord> records) {
  auto meta = common_metadata(config);
  meta.emplace_back("t_pen", config.t_pen.describe());
  meta.emplace_back("marking", std::string(to_string(config.marking)));
  meta.emplace_back("base_time_policy", "optimum of the clean single-vertex search");
  meta.emplace_back("attack", "uniform 2EC through a uniform anchor");
  std::map<std::pair<Model, std::size_t>, std::tuple<std::size_t, std::size_t, std::size_t>> counts;
  for (const auto& r : records) {
    auto& [regen, anchors, graphs] = counts[{r.model, r.n}];
    regen += r.regenerations;
    anchors += r.anchor_resamples;
    graphs += r.graph_resamples;
  }
  for (const auto& [key, c] : counts) {
    const std::string suffix = std::string(to_string(key.first)) + "." + std::to_string(key.second);
    meta.emplace_back("regenerations." + suffix, std::to_string(std::get<0>(c)));
    meta.emplace_back("anchor_resamples." + suffix, std::to_string(std::get<1>(c)));
    meta.emplace_back("graph_resamples." + suffix, std::to_string(std::get<2>(c)));
  }
  return meta;
}

}  // namespace qsa
