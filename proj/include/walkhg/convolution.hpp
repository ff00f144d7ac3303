#ifndef WALKHG_CONVOLUTION_HPP
#define WALKHG_CONVOLUTION_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "walkhg/exec.hpp"
#include "walkhg/finite_graph.hpp"
#include "walkhg/lazy_graph.hpp"
#include "walkhg/rational.hpp"

namespace walkhg {

// Sparse row of R_i . R_j = sum_k P_{i,j}^k R_k: strictly positive
// coefficients, strictly increasing level indices.
class ConvolutionRow {
 public:
  ConvolutionRow() = default;
  static ConvolutionRow from_dense(const std::vector<Rational>& dense);
  static ConvolutionRow point_mass(int k);

  const std::vector<std::pair<int, Rational>>& entries() const { return entries_; }
  Rational coefficient(int k) const;
  Rational total_mass() const;
  bool empty() const { return entries_.empty(); }
  int min_index() const { return entries_.front().first; }
  int max_index() const { return entries_.back().first; }

  std::vector<Rational> to_dense(int size) const;

  friend bool operator==(const ConvolutionRow& a, const ConvolutionRow& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const ConvolutionRow& a, const ConvolutionRow& b) {
    return !(a == b);
  }

 private:
  std::vector<std::pair<int, Rational>> entries_;
};

// All rows P_{i,j}^. for one base point. For a finite (self-centered) graph
// the index set is the full square 0..s with s the diameter. For a truncated
// infinite graph the table holds every row with i+j <= pair_sum_bound
// (= 2*level_bound), computed inside a ball of that radius; the geodesic
// containment argument makes all stored rows exact.
class ConvolutionTable {
 public:
  const ConvolutionRow& row(int i, int j) const;  // throws scope_error
  bool has_row(int i, int j) const;

  bool from_finite_graph() const { return finite_; }
  int level_bound() const { return level_bound_; }
  int pair_sum_bound() const { return pair_sum_bound_; }
  // Highest level k with a known |Gamma_k(v0)|.
  int max_known_level() const { return static_cast<int>(level_sizes_.size()) - 1; }
  long long level_size(int k) const { return level_sizes_[k]; }
  const std::string& base_label() const { return base_label_; }

  friend bool operator==(const ConvolutionTable& a, const ConvolutionTable& b) {
    return a.rows_ == b.rows_;
  }

  nlohmann::json to_json() const;

 private:
  friend class TableBuilder;
  bool finite_ = true;
  int level_bound_ = 0;
  int pair_sum_bound_ = 0;
  std::string base_label_;
  std::vector<long long> level_sizes_;
  std::map<std::pair<int, int>, ConvolutionRow> rows_;
};

struct WellDefinedVerdict {
  bool well_defined = false;
  int witness = -1;  // vertex with e(v) < diameter, finite failure only
  int witness_eccentricity = -1;
  int radius = -1;
  int diameter = -1;
  std::string diagnostic() const;
};

// Finite graphs: well-defined iff self-centered. Infinite graphs: always.
WellDefinedVerdict check_well_defined(const FiniteGraph& g, Exec ex = Exec::parallel);
WellDefinedVerdict check_well_defined(const LazyGraph& g);

// Direct evaluation of P_{i,j}^k: average over v in Gamma_i(v0) of
// |Gamma_j(v) n Gamma_k(v0)| / |Gamma_j(v)|. One BFS per v; this is the
// plain-formula path that the batched table kernel is tested against.
Rational convolution_coefficient(const FiniteGraph& g, int v0, int i, int j, int k);
Rational convolution_coefficient(const LazyGraph& g, const VertexKey& v0, int i, int j,
                                 int k);

// Batched table kernel (parallel over partition levels).
ConvolutionTable convolution_table(const FiniteGraph& g, int v0,
                                   Exec ex = Exec::parallel);
// Truncated table: rows (i,j) with i+j <= 2L from a ball of radius 2L
// (ball_radius may widen the ball; the row set is unchanged).
ConvolutionTable convolution_table(const LazyGraph& g, const VertexKey& v0, int max_level,
                                   Exec ex = Exec::parallel, int ball_radius = -1);

// Seeded two-jump experiment; counts[k] over `samples` runs. Counter-based
// per-sample randomness: the result depends only on (seed, samples).
struct McEstimate {
  int i = 0, j = 0;
  long long samples = 0;
  uint64_t seed = 0;
  std::map<int, long long> counts;
  nlohmann::json to_json() const;
};

McEstimate mc_estimate(const FiniteGraph& g, int v0, int i, int j, long long samples,
                       uint64_t seed, Exec ex = Exec::parallel);
McEstimate mc_estimate(const LazyGraph& g, const VertexKey& v0, int i, int j,
                       long long samples, uint64_t seed, Exec ex = Exec::parallel);

nlohmann::json row_to_json(const ConvolutionRow& row);
ConvolutionRow row_from_json(const nlohmann::json& j);

}  // namespace walkhg

#endif
