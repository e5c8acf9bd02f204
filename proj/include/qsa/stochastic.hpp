#ifndef QSA_STOCHASTIC_HPP_
#define QSA_STOCHASTIC_HPP_

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "qsa/errors.hpp"
#include "qsa/graph.hpp"

namespace qsa {

/// Column-stochastic transition matrix on n vertices, stored as one sparse
/// column per source vertex. Entry (w, v) is the probability of moving v -> w.
template <class Scalar>
class StochasticMatrix {
 public:
  struct Entry {
    Vertex row;
    Scalar weight;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  using Column = std::vector<Entry>;

  static constexpr double column_sum_tolerance = 1e-12;

  StochasticMatrix() = default;

  explicit StochasticMatrix(std::vector<Column> columns) : columns_(std::move(columns)) {
    const std::size_t n = columns_.size();
    for (std::size_t v = 0; v < n; ++v) {
      auto& col = columns_[v];
      std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
      Scalar sum = 0;
      for (std::size_t i = 0; i < col.size(); ++i) {
        if (col[i].row >= n) throw ParameterError("row id out of range in column " + std::to_string(v));
        if (i > 0 && col[i - 1].row == col[i].row)
          throw ParameterError("repeated row in column " + std::to_string(v));
        if (!(col[i].weight >= 0)) throw ParameterError("negative weight in column " + std::to_string(v));
        sum += col[i].weight;
      }
      using std::abs;
      if (abs(sum - Scalar(1)) > Scalar(column_sum_tolerance))
        throw ParameterError("column " + std::to_string(v) + " does not sum to 1");
    }
  }

  std::size_t order() const noexcept { return columns_.size(); }
  std::span<const Entry> column(Vertex v) const { return columns_[v]; }

  Scalar operator()(Vertex row, Vertex col) const {
    const auto& c = columns_[col];
    auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, Vertex r) { return e.row < r; });
    return (it != c.end() && it->row == row) ? it->weight : Scalar(0);
  }

  friend bool operator==(const StochasticMatrix&, const StochasticMatrix&) = default;

 private:
  std::vector<Column> columns_;
};

/// Simple random walk: entry (w, v) = 1/deg(v) for each neighbour w of v.
template <class Scalar = double>
StochasticMatrix<Scalar> uniform_stochastic(const Graph& g) {
  std::vector<typename StochasticMatrix<Scalar>::Column> cols(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    if (nb.empty()) throw DegenerateInputError("isolated vertex " + std::to_string(v));
    const Scalar w = Scalar(1) / Scalar(nb.size());
    for (Vertex u : nb) cols[v].push_back({u, w});
  }
  return StochasticMatrix<Scalar>(std::move(cols));
}

/// Replaces the column of every marked vertex by the unit self-column.
template <class Scalar>
StochasticMatrix<Scalar> absorb_marked(const StochasticMatrix<Scalar>& p, const VertexSet& marked) {
  if (marked.empty()) throw ParameterError("marked set is empty");
  std::vector<typename StochasticMatrix<Scalar>::Column> cols(p.order());
  for (Vertex v = 0; v < p.order(); ++v) {
    auto c = p.column(v);
    cols[v].assign(c.begin(), c.end());
  }
  for (Vertex v : marked) {
    if (v >= p.order()) throw ParameterError("marked vertex " + std::to_string(v) + " out of range");
    cols[v] = {{v, Scalar(1)}};
  }
  return StochasticMatrix<Scalar>(std::move(cols));
}

}  // namespace qsa

#endif
