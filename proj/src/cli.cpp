#include "qsa/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "qsa/attack.hpp"
#include "qsa/csv.hpp"
#include "qsa/ec.hpp"
#include "qsa/errors.hpp"
#include "qsa/experiment.hpp"
#include "qsa/graph.hpp"
#include "qsa/random.hpp"
#include "qsa/szegedy.hpp"

namespace qsa {

namespace {

constexpr std::uint64_t default_seed = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string model;
  std::optional<std::size_t> n;
  std::string n_grid;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
  std::string t_pen = "log";
  std::string out;
  std::optional<std::size_t> workers;
  std::string in;
  std::optional<Vertex> vertex;
  std::string marked;
  std::string orders;
  std::optional<std::size_t> distance;
  std::optional<std::size_t> t_max;
  std::string marking = "phase";
  ModelOverrides overrides;
};

std::size_t default_workers() {
  if (const char* env = std::getenv("QSA_WORKERS")) {
    try {
      auto w = std::stoul(env);
      if (w > 0) return w;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t seed_or_default(const Options& o, std::ostream& err) {
  if (o.seed) return *o.seed;
  err << "seed: " << default_seed << " (default)\n";
  return default_seed;
}

/// Runs `write` against --out when given, stdout otherwise.
void emit(const Options& o, std::ostream& out, const std::function<void(std::ostream&)>& write) {
  if (o.out.empty()) {
    write(out);
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + o.out);
  write(file);
  if (!file) throw std::runtime_error("write failed for " + o.out);
}

/// Writes `<out>.meta`, or the error stream when printing to stdout.
void emit_metadata(const Options& o, const std::vector<std::pair<std::string, std::string>>& meta, std::ostream& err) {
  if (o.out.empty()) {
    for (const auto& [k, v] : meta) err << "meta: " << k << '=' << v << '\n';
    return;
  }
  std::ofstream file(o.out + ".meta", std::ios::binary);
  for (const auto& [k, v] : meta) file << k << '=' << v << '\n';
  if (!file) throw std::runtime_error("write failed for " + o.out + ".meta");
}

Graph load_graph(const Options& o) {
  if (o.in.empty()) throw UsageError("--in <edge list> is required");
  return read_edge_list(o.in);
}

std::vector<Model> parse_models(const std::string& text) {
  if (text.empty() || text == "all") return {Model::ErdosRenyi, Model::WattsStrogatz, Model::BarabasiAlbert};
  std::vector<Model> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    out.push_back(parse_model(text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int cmd_generate(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.model.empty() || !o.n) throw UsageError("generate needs --model and --n");
  const Model m = parse_model(o.model);
  Graph g = generate(model_params(m, *o.n, o.overrides, seed_or_default(o, err)), *o.n);
  emit(o, out, [&](std::ostream& s) { write_edge_list(g, s); });
  return 0;
}

int cmd_scan_ec(const Options& o, std::ostream& out, std::ostream&) {
  Graph g = load_graph(o);
  if (!o.vertex) throw UsageError("scan-ec needs --vertex");
  const OrderSet orders = OrderSet::parse(o.orders.empty() ? "2,3" : o.orders);
  auto found = find_ec_within_distance(g, *o.vertex, o.distance.value_or(2), orders);
  emit(o, out, [&](std::ostream& s) {
    s << "anchor,kind,vertices\n";
    for (const auto& ec : found) s << ec.anchor << ',' << to_string(ec.kind) << ',' << format_vertices(ec.vertices) << '\n';
  });
  return 0;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(o);
  if (o.marked.empty()) throw UsageError("search needs --marked");
  const VertexSet marked = parse_vertices(o.marked);
  const double t_pen = PenaltyRule::parse(o.t_pen)(g.order());
  SearchEvolution<double> run(g, marked, uniform_stochastic<double>(g), parse_marking(o.marking));
  const auto best = optimize_measurement_time(run, t_pen);
  const std::size_t t_max = o.t_max.value_or(run.time());
  run.probability(t_max);
  err << "optimum: t=" << best.t << " expected_runtime=" << format_double(best.expected_runtime)
      << " probability=" << format_double(best.probability) << " t_pen=" << format_double(t_pen) << '\n';
  emit(o, out, [&](std::ostream& s) {
    s << "t,probability\n";
    for (std::size_t t = 0; t <= t_max; ++t) s << t << ',' << format_double(run.trace()[t]) << '\n';
  });
  return 0;
}

int cmd_attack(const Options& o, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(o);
  if (o.marked.empty()) throw UsageError("attack needs --marked <vertex>");
  const VertexSet marked = parse_vertices(o.marked);
  if (marked.size() != 1) throw UsageError("attack expects a single marked vertex");
  const Vertex anchor = marked.front();
  if (anchor >= g.order()) throw ParameterError("marked vertex out of range");
  const std::uint64_t seed = seed_or_default(o, err);
  const OrderSet orders = OrderSet::parse(o.orders.empty() ? "2" : o.orders);
  auto candidates = find_ec_within_distance(g, anchor, o.distance.value_or(2), orders);
  if (candidates.empty())
    throw std::runtime_error("no exceptional configuration contains vertex " + std::to_string(anchor));
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  const auto& ec = candidates[pick(rng)];
  const double t_pen = PenaltyRule::parse(o.t_pen)(g.order());
  auto report = evaluate_attack(g, uniform_stochastic<double>(g), ec, t_pen, parse_marking(o.marking));
  emit(o, out, [&](std::ostream& s) {
    write_attack_header(s);
    write_attack_row("file", g.order(), seed, report, s);
  });
  return 0;
}

ExperimentConfig experiment_config(Experiment e, const Options& o, std::ostream& err) {
  ExperimentConfig c = default_config(e);
  c.models = parse_models(o.model);
  if (!o.n_grid.empty()) c.n_grid = NGrid::parse(o.n_grid);
  else if (o.n) c.n_grid = {*o.n, *o.n, 1};
  if (o.samples) c.samples_per_n = *o.samples;
  c.root_seed = seed_or_default(o, err);
  c.t_pen = PenaltyRule::parse(o.t_pen);
  c.workers = o.workers.value_or(default_workers());
  c.overrides = o.overrides;
  c.marking = parse_marking(o.marking);
  if (!o.orders.empty() || o.distance) {
    const OrderSet orders = OrderSet::parse(o.orders.empty() ? "2,3" : o.orders);
    const std::size_t d = o.distance.value_or(2);
    std::string label = std::string("order") + (orders.two ? "2" : "") + (orders.three ? "3" : "") + "_d" +
                        std::to_string(d);
    c.panels = {{label, orders, d}};
  }
  validate(c);
  return c;
}

void summarize(const std::vector<AttackRecord>& records, std::ostream& err) {
  for (Model m : {Model::ErdosRenyi, Model::WattsStrogatz, Model::BarabasiAlbert}) {
    std::vector<AttackReport> reports;
    for (const auto& r : records)
      if (r.model == m) reports.push_back(r.report);
    if (reports.empty()) continue;
    auto e = efficiency_statistics(reports, EfficiencyKind::Plain);
    auto s = efficiency_statistics(reports, EfficiencyKind::Strong);
    err << to_string(m) << ": eff median " << format_double(e.median) << " [" << format_double(e.min) << ", "
        << format_double(e.max) << "], strong_eff median " << format_double(s.median) << '\n';
  }
}

int cmd_fig1(const Options& o, std::ostream& out, std::ostream& err) {
  auto c = experiment_config(Experiment::Fig1, o, err);
  auto rows = run_fig1(c);
  emit(o, out, [&](std::ostream& s) { write_fig1_csv(rows, s); });
  emit_metadata(o, fig1_metadata(c, rows), err);
  return 0;
}

int cmd_fig2(const Options& o, std::ostream& out, std::ostream& err) {
  auto c = experiment_config(Experiment::Fig2, o, err);
  auto records = run_fig2(c);
  emit(o, out, [&](std::ostream& s) { write_fig2_csv(records, s); });
  emit_metadata(o, fig2_metadata(c, records), err);
  summarize(records, err);
  return 0;
}

int cmd_fig3(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<ExponentRow> rows;
  if (!o.in.empty()) {
    std::ifstream in(o.in);
    if (!in) throw std::runtime_error("cannot open " + o.in);
    rows = run_fig3(read_fig2_csv(in));
  } else {
    auto c = experiment_config(Experiment::Fig3, o, err);
    if (c.n_grid.values().size() < 3) throw UsageError("fig3 needs at least 3 grid points");
    auto records = run_fig2(c);
    rows = run_fig3(records);
    emit_metadata(o, fig2_metadata(c, records), err);
  }
  emit(o, out, [&](std::ostream& s) { write_fig3_csv(rows, s); });
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulate Szegedy spatial search and exceptional-configuration attacks", "qsa"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file mirroring the flags (flags win)");

  Options o;
  app.add_option("--model", o.model, "er, ws, ba; comma list or 'all' for experiments");
  app.add_option("--n", o.n, "graph order");
  app.add_option("--n-grid", o.n_grid, "start:stop:step");
  app.add_option("--samples", o.samples, "samples per graph order");
  app.add_option("--seed", o.seed, "root seed");
  app.add_option("--t-pen", o.t_pen, "penalty time: number or 'log' for ceil(ln n)");
  app.add_option("--out", o.out, "output file (default stdout)");
  app.add_option("--workers", o.workers, "worker threads (default $QSA_WORKERS or all cores)");
  app.add_option("--in", o.in, "input edge list (fig3: attack CSV)");
  app.add_option("--vertex", o.vertex, "vertex to scan");
  app.add_option("--marked", o.marked, "marked vertices, comma separated");
  app.add_option("--orders", o.orders, "configuration orders, e.g. 2,3");
  app.add_option("--distance", o.distance, "maximum hop distance from the anchor (1 or 2)");
  app.add_option("--t-max", o.t_max, "last time step of a printed trace");
  app.add_option("--marking", o.marking, "marked-vertex scheme: phase (default) or absorb");
  app.add_option("--p", o.overrides.er_p, "Erdos-Renyi edge probability");
  app.add_option("--k", o.overrides.ws_k, "Watts-Strogatz initial even degree");
  app.add_option("--beta", o.overrides.ws_beta, "Watts-Strogatz rewiring probability");
  app.add_option("--m0", o.overrides.ba_m0, "Barabasi-Albert attachment count");

  std::function<int()> action;
  auto sub = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&, std::ostream&)) {
    app.add_subcommand(name, help)->callback([&, fn] { action = [&, fn] { return fn(o, out, err); }; });
  };
  sub("generate", "sample a random graph and write its edge list", cmd_generate);
  sub("scan-ec", "list exceptional configurations through a vertex", cmd_scan_ec);
  sub("search", "success-probability trace and tuned measurement time", cmd_search);
  sub("attack", "attack a single-vertex search with a random configuration", cmd_attack);
  sub("fig1", "configuration formation probabilities", cmd_fig1);
  sub("fig2", "attack and strong attack efficiency per sample", cmd_fig2);
  sub("fig3", "complexity exponents of reference and attacked searches", cmd_fig3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ParameterError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace qsa
