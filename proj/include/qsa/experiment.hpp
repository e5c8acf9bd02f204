#ifndef QSA_EXPERIMENT_HPP_
#define QSA_EXPERIMENT_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsa/attack.hpp"
#include "qsa/ec.hpp"
#include "qsa/graph.hpp"
#include "qsa/regression.hpp"

namespace qsa {

enum class Experiment { Fig1, Fig2, Fig3 };

/// Arithmetic grid start, start+step, ..., up to and including stop.
struct NGrid {
  std::size_t start = 100;
  std::size_t stop = 1000;
  std::size_t step = 100;

  /// "start:stop:step" or a single value.
  static NGrid parse(std::string_view text);
  std::vector<std::size_t> values() const;
};

/// Either a fixed penalty or ceil(ln n).
struct PenaltyRule {
  std::optional<double> fixed;

  /// "log" or a non-negative number.
  static PenaltyRule parse(std::string_view text);
  double operator()(std::size_t n) const;
  std::string describe() const;
};

/// Non-default generator parameters; unset fields follow the per-n defaults.
struct ModelOverrides {
  std::optional<double> er_p;
  std::optional<std::size_t> ws_k;
  std::optional<double> ws_beta;
  std::optional<std::size_t> ba_m0;
};

ModelParams model_params(Model m, std::size_t n, const ModelOverrides& overrides, std::uint64_t seed = 0);

/// Panels of the formation experiment: order 2; orders 2 or 3 within two
/// hops; orders 2 or 3 within one hop.
std::vector<FormationPanel> default_formation_panels();

struct ExperimentConfig {
  Experiment experiment = Experiment::Fig1;
  std::vector<Model> models{Model::ErdosRenyi, Model::WattsStrogatz, Model::BarabasiAlbert};
  NGrid n_grid;
  std::size_t samples_per_n = 50;
  PenaltyRule t_pen;
  std::vector<FormationPanel> panels = default_formation_panels();
  std::uint64_t root_seed = 1;
  std::size_t workers = 1;
  ModelOverrides overrides;
  MarkingScheme marking = MarkingScheme::PhaseFlip;
};

/// Desk-scale defaults: formation scan on 100:1000:100 with 50 samples,
/// attack runs on 100:800:100 with 20 samples.
ExperimentConfig default_config(Experiment e);
void validate(const ExperimentConfig& config);

std::uint64_t model_index(Model m);

// ---------------------------------------------------------------------------
// Formation probabilities

struct FormationRow {
  Model model;
  std::size_t n;
  std::string panel;
  FormationEstimate estimate;
};

/// One row per (model, n, panel), all panels of a (model, n) sharing samples.
/// The row seed is derive_seed(root, {model, n}).
std::vector<FormationRow> run_fig1(const ExperimentConfig& config);
void write_fig1_csv(std::span<const FormationRow> rows, std::ostream& out);

// ---------------------------------------------------------------------------
// Attack efficiency

struct AttackRecord {
  Model model = Model::ErdosRenyi;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  AttackReport report;
  std::size_t regenerations = 0;     // disconnected graphs discarded
  std::size_t anchor_resamples = 0;  // vertices drawn without a 2EC
  std::size_t graph_resamples = 0;   // graphs discarded after n fruitless vertex draws
};

/// Reproduces one attack sample from its seed: a connected graph, a random
/// anchor with at least one 2EC, a uniformly chosen 2EC through it, and the
/// three tuned/attacked/re-tuned searches.
AttackRecord run_attack_sample(Model model, std::size_t n, std::uint64_t sample_seed, double t_pen,
                               const ModelOverrides& overrides = {},
                               MarkingScheme marking = MarkingScheme::PhaseFlip);

/// Sample i of (model, n) uses derive_seed(root, {model, n, i}).
std::vector<AttackRecord> run_fig2(const ExperimentConfig& config);

/// Attack rows: model,n,seed,anchor,added_vertices,kind,t_base,p_base,T_base,
/// p_attacked,T_attacked,eff,t_opt,T_opt,strong_eff,t_pen.
void write_attack_header(std::ostream& out);
void write_attack_row(std::string_view model, std::size_t n, std::uint64_t seed, const AttackReport& r,
                      std::ostream& out);
void write_fig2_csv(std::span<const AttackRecord> records, std::ostream& out);
std::vector<AttackRecord> read_fig2_csv(std::istream& in);

// ---------------------------------------------------------------------------
// Complexity exponents

struct ExponentRow {
  Model model;
  std::string variant;  // reference, attacked, defended
  RegressionResult fit;
};

/// Per model: exponent of the clean tuned search (reference), the attacked
/// search at the common time (attacked) and the re-tuned attacked search
/// (defended).
std::vector<ExponentRow> run_fig3(std::span<const AttackRecord> records);
std::vector<ExponentRow> run_fig3(const ExperimentConfig& config);
void write_fig3_csv(std::span<const ExponentRow> rows, std::ostream& out);

/// key=value lines describing policies and resampling counts.
std::vector<std::pair<std::string, std::string>> fig1_metadata(const ExperimentConfig& config,
                                                               std::span<const FormationRow> rows);
std::vector<std::pair<std::string, std::string>> fig2_metadata(const ExperimentConfig& config,
                                                               std::span<const AttackRecord> records);

}  // namespace qsa

#endif
