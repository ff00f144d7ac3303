#include "walkhg/convolution.hpp"

#include <algorithm>
#include <queue>

#include "walkhg/errors.hpp"

namespace walkhg {

ConvolutionRow ConvolutionRow::from_dense(const std::vector<Rational>& dense) {
  ConvolutionRow r;
  for (int k = 0; k < static_cast<int>(dense.size()); ++k) {
    if (dense[k].is_zero()) continue;
    if (!dense[k].is_positive())
      throw std::logic_error("negative convolution coefficient");
    r.entries_.emplace_back(k, dense[k]);
  }
  return r;
}

ConvolutionRow ConvolutionRow::point_mass(int k) {
  ConvolutionRow r;
  r.entries_.emplace_back(k, Rational(1));
  return r;
}

Rational ConvolutionRow::coefficient(int k) const {
  for (const auto& [idx, c] : entries_)
    if (idx == k) return c;
  return Rational(0);
}

Rational ConvolutionRow::total_mass() const {
  Rational m(0);
  for (const auto& [idx, c] : entries_) m += c;
  return m;
}

std::vector<Rational> ConvolutionRow::to_dense(int size) const {
  std::vector<Rational> d(size, Rational(0));
  for (const auto& [idx, c] : entries_) d.at(idx) = c;
  return d;
}

const ConvolutionRow& ConvolutionTable::row(int i, int j) const {
  auto it = rows_.find({i, j});
  if (it == rows_.end()) {
    if (finite_)
      throw scope_error("row (" + std::to_string(i) + "," + std::to_string(j) +
                        ") outside table: levels run 0.." + std::to_string(level_bound_));
    throw scope_error("row (" + std::to_string(i) + "," + std::to_string(j) +
                      ") not certified: table covers i+j <= " +
                      std::to_string(pair_sum_bound_));
  }
  return it->second;
}

bool ConvolutionTable::has_row(int i, int j) const {
  return rows_.count({i, j}) > 0;
}

std::string WellDefinedVerdict::diagnostic() const {
  if (well_defined) return "convolution well-defined";
  return "graph is not self-centered: vertex " + std::to_string(witness) +
         " has eccentricity " + std::to_string(witness_eccentricity) + " < diameter " +
         std::to_string(diameter) + ", so some Gamma_j(v) is empty";
}

WellDefinedVerdict check_well_defined(const FiniteGraph& g, Exec ex) {
  auto m = metrics(g, ex);
  WellDefinedVerdict v;
  v.radius = m.radius;
  v.diameter = m.diameter;
  v.well_defined = m.self_centered;
  if (!m.self_centered)
    for (int u = 0; u < g.order(); ++u)
      if (m.eccentricity[u] < m.diameter) {
        v.witness = u;
        v.witness_eccentricity = m.eccentricity[u];
        break;
      }
  return v;
}

WellDefinedVerdict check_well_defined(const LazyGraph&) {
  WellDefinedVerdict v;
  v.well_defined = true;  // every vertex of an infinite graph has e(v) = infinity
  return v;
}

namespace {

// Accumulates, for one (i,j) cell, integer counts grouped by the denominator
// |Gamma_j(v)|; the rational division happens once per distinct denominator.
struct CellAccumulator {
  std::map<long long, std::vector<long long>> by_total;

  void add(long long total, const std::vector<long long>& counts) {
    auto& sums = by_total[total];
    if (sums.size() < counts.size()) sums.resize(counts.size(), 0);
    for (size_t k = 0; k < counts.size(); ++k) sums[k] += counts[k];
  }

  ConvolutionRow finish(long long level_size, int dense_size) const {
    std::vector<Rational> dense(dense_size, Rational(0));
    for (const auto& [total, sums] : by_total)
      for (size_t k = 0; k < sums.size(); ++k)
        if (sums[k] != 0) dense[k] += Rational(sums[k], total);
    Rational inv(1, level_size);
    for (auto& c : dense) c *= inv;
    return ConvolutionRow::from_dense(dense);
  }
};

}  // namespace

class TableBuilder {
 public:
  static ConvolutionTable finite(const FiniteGraph& g, int v0, Exec ex) {
    auto wd = check_well_defined(g, ex);
    if (!wd.well_defined) throw domain_refusal(wd.diagnostic());
    if (v0 < 0 || v0 >= g.order()) throw usage_error("base vertex out of range");

    auto dist0 = bfs_distances(g, v0);
    int s = *std::max_element(dist0.begin(), dist0.end());

    ConvolutionTable t;
    t.finite_ = true;
    t.level_bound_ = s;
    t.pair_sum_bound_ = 2 * s;
    t.base_label_ = std::to_string(v0);
    t.level_sizes_.assign(s + 1, 0);
    for (int d : dist0) ++t.level_sizes_[d];

    std::vector<std::vector<int>> levels(s + 1);
    for (int v = 0; v < g.order(); ++v) levels[dist0[v]].push_back(v);

    std::vector<std::map<std::pair<int, int>, ConvolutionRow>> partial(s + 1);
#pragma omp parallel for schedule(dynamic) if (parallel_on(ex))
    for (int i = 0; i <= s; ++i) {
      std::vector<CellAccumulator> acc(s + 1);
      std::vector<std::vector<long long>> counts(s + 1);
      for (int v : levels[i]) {
        for (auto& row : counts) row.assign(s + 1, 0);
        auto dv = bfs_distances(g, v);
        for (int w = 0; w < g.order(); ++w) ++counts[dv[w]][dist0[w]];
        for (int j = 0; j <= s; ++j) {
          long long total = 0;
          for (long long c : counts[j]) total += c;
          acc[j].add(total, counts[j]);
        }
      }
      for (int j = 0; j <= s; ++j)
        partial[i][{i, j}] = acc[j].finish(t.level_sizes_[i], s + 1);
    }
    for (auto& p : partial) t.rows_.merge(p);
    return t;
  }

  static ConvolutionTable lazy(const LazyGraph& g, const VertexKey& v0, int max_level,
                               Exec ex, int ball_radius) {
    if (max_level < 0) throw usage_error("max_level must be >= 0");
    int bound = 2 * max_level;
    int radius = ball_radius < 0 ? bound : ball_radius;
    if (radius < bound)
      throw scope_error("ball radius " + std::to_string(radius) +
                        " below certification radius " + std::to_string(bound));
    Ball ball(g, v0, radius);
    if (static_cast<int>(ball.levels().size()) <= bound)
      throw scope_error("graph too small: BFS exhausted before radius " +
                        std::to_string(bound));

    ConvolutionTable t;
    t.finite_ = false;
    t.level_bound_ = max_level;
    t.pair_sum_bound_ = bound;
    t.base_label_ = key_to_string(v0);
    t.level_sizes_.assign(bound + 1, 0);
    for (int k = 0; k <= bound; ++k) t.level_sizes_[k] = ball.level_size(k);

    std::vector<std::map<std::pair<int, int>, ConvolutionRow>> partial(bound + 1);
#pragma omp parallel for schedule(dynamic) if (parallel_on(ex))
    for (int i = 0; i <= bound; ++i) {
      int depth = bound - i;  // rows (i,j) with j <= bound - i
      std::vector<CellAccumulator> acc(depth + 1);
      std::vector<std::vector<long long>> counts(depth + 1);
      for (int v : ball.levels()[i]) {
        for (auto& row : counts) row.assign(bound + 1, 0);
        auto dv = ball.restricted_bfs(v, depth);
        for (int w = 0; w < ball.size(); ++w)
          if (dv[w] >= 0 && dv[w] <= depth && ball.dist_from_center(w) <= bound)
            ++counts[dv[w]][ball.dist_from_center(w)];
        for (int j = 0; j <= depth; ++j) {
          long long total = 0;
          for (long long c : counts[j]) total += c;
          acc[j].add(total, counts[j]);
        }
      }
      for (int j = 0; j <= depth; ++j)
        partial[i][{i, j}] = acc[j].finish(t.level_sizes_[i], bound + 1);
    }
    for (auto& p : partial) t.rows_.merge(p);
    return t;
  }
};

ConvolutionTable convolution_table(const FiniteGraph& g, int v0, Exec ex) {
  return TableBuilder::finite(g, v0, ex);
}

ConvolutionTable convolution_table(const LazyGraph& g, const VertexKey& v0, int max_level,
                                   Exec ex, int ball_radius) {
  return TableBuilder::lazy(g, v0, max_level, ex, ball_radius);
}

Rational convolution_coefficient(const FiniteGraph& g, int v0, int i, int j, int k) {
  auto wd = check_well_defined(g, Exec::serial);
  if (!wd.well_defined) throw domain_refusal(wd.diagnostic());
  auto dist0 = bfs_distances(g, v0);
  int s = *std::max_element(dist0.begin(), dist0.end());
  if (i < 0 || j < 0 || k < 0) throw usage_error("levels must be nonnegative");
  if (i > s || j > s)
    throw scope_error("level out of range: Gamma_" + std::to_string(std::max(i, j)) +
                      "(v) is empty, eccentricity is " + std::to_string(s));
  if (k > s) return Rational(0);

  long long gamma_i = 0;
  Rational sum(0);
  for (int v = 0; v < g.order(); ++v) {
    if (dist0[v] != i) continue;
    ++gamma_i;
    auto dv = bfs_distances(g, v);
    long long inter = 0, total = 0;
    for (int w = 0; w < g.order(); ++w)
      if (dv[w] == j) {
        ++total;
        if (dist0[w] == k) ++inter;
      }
    sum += Rational(inter, total);
  }
  return sum / Rational(gamma_i);
}

Rational convolution_coefficient(const LazyGraph& g, const VertexKey& v0, int i, int j,
                                 int k) {
  if (i < 0 || j < 0 || k < 0) throw usage_error("levels must be nonnegative");
  if (k > i + j || k < std::abs(i - j)) return Rational(0);
  Ball ball(g, v0, i + j);
  Rational sum(0);
  for (int v : ball.levels()[i]) {
    auto dv = ball.restricted_bfs(v, j);
    long long inter = 0, total = 0;
    for (int w = 0; w < ball.size(); ++w)
      if (dv[w] == j) {
        ++total;
        if (ball.dist_from_center(w) == k) ++inter;
      }
    sum += Rational(inter, total);
  }
  return sum / Rational(ball.level_size(i));
}

namespace {

inline uint64_t mix64(uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

inline uint64_t draw(uint64_t seed, uint64_t counter) {
  return mix64(seed + mix64(counter + 0x9e3779b97f4a7c15ULL));
}

// Two-jump experiment over precomputed target lists: sources = Gamma_i(v0),
// targets[v] = Gamma_j(v), target_level[w] = d(v0,w).
McEstimate run_mc(const std::vector<std::vector<int>>& targets,
                  const std::vector<int>& target_level, int i, int j, long long samples,
                  uint64_t seed, Exec ex) {
  if (samples < 1) throw usage_error("samples must be >= 1");
  McEstimate est;
  est.i = i;
  est.j = j;
  est.samples = samples;
  est.seed = seed;

  int max_level = *std::max_element(target_level.begin(), target_level.end());
  std::vector<long long> counts(max_level + 1, 0);
  long long n_sources = static_cast<long long>(targets.size());
#pragma omp parallel if (parallel_on(ex))
  {
    std::vector<long long> local(max_level + 1, 0);
#pragma omp for schedule(static)
    for (long long t = 0; t < samples; ++t) {
      uint64_t r1 = draw(seed, 2 * static_cast<uint64_t>(t));
      uint64_t r2 = draw(seed, 2 * static_cast<uint64_t>(t) + 1);
      const auto& list = targets[static_cast<size_t>(r1 % n_sources)];
      int w = list[static_cast<size_t>(r2 % list.size())];
      ++local[target_level[w]];
    }
#pragma omp critical
    for (size_t k = 0; k < local.size(); ++k) counts[k] += local[k];
  }
  for (int k = 0; k <= max_level; ++k)
    if (counts[k] > 0) est.counts[k] = counts[k];
  return est;
}

}  // namespace

McEstimate mc_estimate(const FiniteGraph& g, int v0, int i, int j, long long samples,
                       uint64_t seed, Exec ex) {
  auto wd = check_well_defined(g, ex);
  if (!wd.well_defined) throw domain_refusal(wd.diagnostic());
  auto dist0 = bfs_distances(g, v0);
  int s = *std::max_element(dist0.begin(), dist0.end());
  if (i < 0 || j < 0 || i > s || j > s)
    throw scope_error("levels must lie in 0.." + std::to_string(s));

  std::vector<std::vector<int>> targets;
  for (int v = 0; v < g.order(); ++v) {
    if (dist0[v] != i) continue;
    auto dv = bfs_distances(g, v);
    std::vector<int> list;
    for (int w = 0; w < g.order(); ++w)
      if (dv[w] == j) list.push_back(w);
    targets.push_back(std::move(list));
  }
  return run_mc(targets, dist0, i, j, samples, seed, ex);
}

McEstimate mc_estimate(const LazyGraph& g, const VertexKey& v0, int i, int j,
                       long long samples, uint64_t seed, Exec ex) {
  if (i < 0 || j < 0) throw usage_error("levels must be nonnegative");
  Ball ball(g, v0, i + j);
  std::vector<std::vector<int>> targets;
  for (int v : ball.levels()[i]) {
    auto dv = ball.restricted_bfs(v, j);
    std::vector<int> list;
    for (int w = 0; w < ball.size(); ++w)
      if (dv[w] == j) list.push_back(w);
    targets.push_back(std::move(list));
  }
  std::vector<int> level(ball.size());
  for (int w = 0; w < ball.size(); ++w) level[w] = ball.dist_from_center(w);
  return run_mc(targets, level, i, j, samples, seed, ex);
}

nlohmann::json row_to_json(const ConvolutionRow& row) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [k, c] : row.entries()) j.push_back({k, c.str()});
  return j;
}

ConvolutionRow row_from_json(const nlohmann::json& j) {
  std::vector<Rational> dense;
  for (const auto& e : j) {
    int k = e.at(0).get<int>();
    if (k >= static_cast<int>(dense.size())) dense.resize(k + 1, Rational(0));
    dense[k] = Rational::parse(e.at(1).get<std::string>());
  }
  return ConvolutionRow::from_dense(dense);
}

nlohmann::json ConvolutionTable::to_json() const {
  nlohmann::json j;
  if (finite_)
    j["base"] = std::stoll(base_label_);
  else
    j["base"] = base_label_;
  j["max_level"] = level_bound_;
  j["exact"] = true;
  nlohmann::json rows = nlohmann::json::object();
  for (const auto& [key, row] : rows_) {
    std::string name = std::to_string(key.first) + "," + std::to_string(key.second);
    rows[name] = row_to_json(row);
  }
  j["rows"] = rows;
  return j;
}

}  // namespace walkhg
