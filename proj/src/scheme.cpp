#include "walkhg/scheme.hpp"

#include <algorithm>
#include <tuple>

#include "walkhg/errors.hpp"

namespace walkhg {

namespace {

struct DrgCounts {
  long long b = 0, c = 0;
};

}  // namespace

DrgVerdict check_distance_regular(const FiniteGraph& g, Exec ex) {
  DrgVerdict v;
  auto D = all_pairs_distances(g, ex);
  int n = g.order();
  int s = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) s = std::max(s, D[a][b]);

  for (int u = 1; u < n; ++u)
    if (g.degree(u) != g.degree(0)) {
      v.distance_regular = false;
      v.witness_kind = "degree";
      v.witness_distance = 0;
      v.pair_a = {std::to_string(0), std::to_string(0)};
      v.pair_b = {std::to_string(u), std::to_string(u)};
      v.count_a = g.degree(0);
      v.count_b = g.degree(u);
      return v;
    }

  // Reference counts come from the lexicographically first pair at each
  // distance; every other pair must reproduce them.
  std::vector<DrgCounts> ref(s + 1);
  std::vector<std::pair<int, int>> ref_pair(s + 1, {-1, -1});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int i = D[a][b];
      if (i >= 1 && ref_pair[i].first < 0) {
        ref_pair[i] = {a, b};
        for (int u : g.neighbors(b)) {
          if (D[a][u] == i + 1) ++ref[i].b;
          if (D[a][u] == i - 1) ++ref[i].c;
        }
      }
    }

  // Witness selection: the lexicographically smallest (i, a, b).
  using Cand = std::tuple<int, int, int, char, long long, long long>;
  std::optional<Cand> worst;
#pragma omp parallel for schedule(dynamic) if (parallel_on(ex))
  for (int a = 0; a < n; ++a) {
    std::optional<Cand> local;
    for (int b = 0; b < n; ++b) {
      int i = D[a][b];
      if (i < 1) continue;
      if (local && std::get<0>(*local) <= i) continue;
      long long cb = 0, cc = 0;
      for (int u : g.neighbors(b)) {
        if (D[a][u] == i + 1) ++cb;
        if (D[a][u] == i - 1) ++cc;
      }
      if (cc != ref[i].c)
        local = {i, a, b, 'c', ref[i].c, cc};
      else if (i < s && cb != ref[i].b)
        local = {i, a, b, 'b', ref[i].b, cb};
    }
    if (local) {
#pragma omp critical
      if (!worst || *local < *worst) worst = local;
    }
  }

  if (worst) {
    auto [i, a, b, kind, ca, cb] = *worst;
    v.distance_regular = false;
    v.witness_distance = i;
    v.witness_kind = std::string(1, kind);
    v.pair_a = {std::to_string(ref_pair[i].first), std::to_string(ref_pair[i].second)};
    v.pair_b = {std::to_string(a), std::to_string(b)};
    v.count_a = ca;
    v.count_b = cb;
    return v;
  }

  v.distance_regular = true;
  v.array.s = s;
  v.array.truncated = false;
  v.array.b.push_back(g.degree(0));
  for (int i = 1; i < s; ++i) v.array.b.push_back(ref[i].b);
  for (int i = 1; i <= s; ++i) v.array.c.push_back(ref[i].c);
  return v;
}

DrgVerdict check_distance_regular(const LazyGraph& g, int prefix, Exec ex) {
  if (prefix < 1) throw usage_error("prefix bound must be >= 1");
  int radius = prefix + 2;
  Ball ball(g, g.base(), radius);
  if (static_cast<int>(ball.levels().size()) <= radius)
    throw scope_error("graph too small for prefix " + std::to_string(prefix));
  DrgVerdict v;

  // Interior vertices have complete neighbor lists.
  int deg0 = static_cast<int>(ball.neighbors(0).size());
  for (int u = 0; u < ball.size(); ++u) {
    if (ball.dist_from_center(u) > radius - 1) continue;
    if (static_cast<int>(ball.neighbors(u).size()) != deg0) {
      v.distance_regular = false;
      v.witness_kind = "degree";
      v.witness_distance = 0;
      v.pair_a = {key_to_string(ball.key(0)), key_to_string(ball.key(0))};
      v.pair_b = {key_to_string(ball.key(u)), key_to_string(ball.key(u))};
      v.count_a = deg0;
      v.count_b = static_cast<int>(ball.neighbors(u).size());
      return v;
    }
  }

  // References from pairs (center, w); those are exact for i <= radius-1.
  std::vector<DrgCounts> ref(prefix + 1);
  std::vector<int> ref_w(prefix + 1, -1);
  for (int i = 1; i <= prefix; ++i) {
    int w = ball.levels()[i][0];
    ref_w[i] = w;
    for (int u : ball.neighbors(w)) {
      if (ball.dist_from_center(u) == i + 1) ++ref[i].b;
      if (ball.dist_from_center(u) == i - 1) ++ref[i].c;
    }
  }

  using Cand = std::tuple<int, int, int, char, long long, long long>;
  std::optional<Cand> worst;
#pragma omp parallel for schedule(dynamic) if (parallel_on(ex))
  for (int a = 0; a < ball.size(); ++a) {
    std::optional<Cand> local;
    int da = ball.dist_from_center(a);
    auto dv = ball.restricted_bfs(a, prefix + 1);
    for (int b = 0; b < ball.size(); ++b) {
      int i = dv[b];
      if (i < 1 || i > prefix) continue;
      if (da + i + 1 > radius) continue;  // neighbor classification not certified
      if (local && std::get<0>(*local) <= i) continue;
      long long cb = 0, cc = 0;
      for (int u : ball.neighbors(b)) {
        if (dv[u] == i + 1) ++cb;
        if (dv[u] == i - 1) ++cc;
      }
      if (cc != ref[i].c)
        local = {i, a, b, 'c', ref[i].c, cc};
      else if (i < prefix && cb != ref[i].b)
        local = {i, a, b, 'b', ref[i].b, cb};
    }
    if (local) {
#pragma omp critical
      if (!worst || *local < *worst) worst = local;
    }
  }

  if (worst) {
    auto [i, a, b, kind, ca, cb] = *worst;
    v.distance_regular = false;
    v.witness_distance = i;
    v.witness_kind = std::string(1, kind);
    v.pair_a = {key_to_string(ball.key(0)), key_to_string(ball.key(ref_w[i]))};
    v.pair_b = {key_to_string(ball.key(a)), key_to_string(ball.key(b))};
    v.count_a = ca;
    v.count_b = cb;
    return v;
  }

  v.distance_regular = true;
  v.array.s = prefix;
  v.array.truncated = true;
  v.array.b.push_back(deg0);
  for (int i = 1; i < prefix; ++i) v.array.b.push_back(ref[i].b);
  for (int i = 1; i <= prefix; ++i) v.array.c.push_back(ref[i].c);
  return v;
}

SchemeTable intersection_numbers(const FiniteGraph& g, Exec ex) {
  auto D = all_pairs_distances(g, ex);
  int n = g.order();
  int s = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) s = std::max(s, D[a][b]);

  SchemeTable t(s, s, false);
  std::vector<std::pair<int, int>> ref_pair(s + 1, {-1, -1});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int k = D[a][b];
      if (ref_pair[k].first < 0) {
        ref_pair[k] = {a, b};
        for (int u = 0; u < n; ++u) ++t.at(D[a][u], D[u][b], k);
      }
    }

  struct Mismatch {
    int a, b, i, j;
    long long expected, got;
    auto order() const { return std::tie(a, b, i, j); }
  };
  std::optional<Mismatch> bad;
#pragma omp parallel for schedule(dynamic) if (parallel_on(ex))
  for (int a = 0; a < n; ++a) {
    std::optional<Mismatch> local;
    std::vector<long long> counts((s + 1) * (s + 1));
    for (int b = 0; b < n && !local; ++b) {
      int k = D[a][b];
      std::fill(counts.begin(), counts.end(), 0);
      for (int u = 0; u < n; ++u) ++counts[D[a][u] * (s + 1) + D[u][b]];
      for (int i = 0; i <= s && !local; ++i)
        for (int j = 0; j <= s && !local; ++j)
          if (counts[i * (s + 1) + j] != t.at(i, j, k))
            local = {a, b, i, j, t.at(i, j, k), counts[i * (s + 1) + j]};
    }
    if (local) {
#pragma omp critical
      if (!bad || local->order() < bad->order()) bad = local;
    }
  }
  if (bad)
    throw not_a_scheme_error(
        "intersection count p_{" + std::to_string(bad->i) + "," + std::to_string(bad->j) +
        "} depends on the pair: reference pair gives " + std::to_string(bad->expected) +
        ", pair (" + std::to_string(bad->a) + "," + std::to_string(bad->b) + ") gives " +
        std::to_string(bad->got));
  return t;
}

SchemeTable intersection_numbers(const LazyGraph& g, const VertexKey& v0, int scope,
                                 Exec ex) {
  if (scope < 1) throw usage_error("scope must be >= 1");
  int radius = 2 * scope;
  Ball ball(g, v0, radius);
  if (static_cast<int>(ball.levels().size()) <= radius)
    throw scope_error("graph too small for scope " + std::to_string(scope));

  SchemeTable t(scope, radius, true);
  struct Mismatch {
    int w, i, j;
    long long expected, got;
  };
  std::optional<Mismatch> bad;

  // Pairs (v0, w) for w at every level k <= 2*scope; counts over the
  // radius-scope core are exact by geodesic containment. A depth cap at
  // `scope` suffices: distances beyond it never enter the bins.
  auto count_pair = [&](int w, std::vector<long long>& counts) {
    auto dw = ball.restricted_bfs(w, scope);
    std::fill(counts.begin(), counts.end(), 0);
    for (int u = 0; u < ball.size(); ++u) {
      int i = ball.dist_from_center(u);
      if (i > scope) continue;
      int j = dw[u];
      if (j < 0 || j > scope) continue;
      ++counts[i * (scope + 1) + j];
    }
  };

  {
    std::vector<long long> counts((scope + 1) * (scope + 1));
    for (int k = 0; k <= radius; ++k) {
      count_pair(ball.levels()[k][0], counts);
      for (int i = 0; i <= scope; ++i)
        for (int j = 0; j <= scope; ++j) t.at(i, j, k) = counts[i * (scope + 1) + j];
    }
  }
  // Every other base-point pair must reproduce the reference counts.
#pragma omp parallel for schedule(dynamic) if (parallel_on(ex))
  for (int w = 0; w < ball.size(); ++w) {
    int k = ball.dist_from_center(w);
    std::vector<long long> counts((scope + 1) * (scope + 1));
    count_pair(w, counts);
    for (int i = 0; i <= scope; ++i)
      for (int j = 0; j <= scope; ++j)
        if (counts[i * (scope + 1) + j] != t.at(i, j, k)) {
#pragma omp critical
          if (!bad || w < bad->w) bad = {w, i, j, t.at(i, j, k), counts[i * (scope + 1) + j]};
        }
  }
  if (bad)
    throw not_a_scheme_error("intersection count p_{" + std::to_string(bad->i) + "," +
                             std::to_string(bad->j) + "} differs at pair (" +
                             key_to_string(ball.key(0)) + "," +
                             key_to_string(ball.key(bad->w)) + "): reference " +
                             std::to_string(bad->expected) + " vs " +
                             std::to_string(bad->got));
  return t;
}

SchemeIdentityVerdict verify_scheme_identities(const SchemeTable& t) {
  SchemeIdentityVerdict v;
  int L = t.index_bound();
  int K = t.relation_bound();
  bool trunc = t.truncated();
  auto fail = [&](const char* id, std::vector<int> idx) {
    v.ok = false;
    v.failed_identity = id;
    v.indices = std::move(idx);
  };

  // (a) p_{0,j}^k = delta_{j,k}
  for (int j = 0; j <= L && v.ok; ++j)
    for (int k = 0; k <= K && v.ok; ++k)
      if (t.at(0, j, k) != (j == k ? 1 : 0)) fail("a", {j, k});

  // (b) p_{i,j}^0 = delta_{i,j} p_{j,j}^0
  for (int i = 0; i <= L && v.ok; ++i)
    for (int j = 0; j <= L && v.ok; ++j)
      if (t.at(i, j, 0) != (i == j ? t.valency(j) : 0)) fail("b", {i, j});

  // (c) p_{i,j}^k = p_{j,i}^k
  for (int i = 0; i <= L && v.ok; ++i)
    for (int j = 0; j <= L && v.ok; ++j)
      for (int k = 0; k <= K && v.ok; ++k)
        if (t.at(i, j, k) != t.at(j, i, k)) fail("c", {i, j, k});

  // (d) sum_j p_{i,j}^k = p_{i,i}^0; complete when i+k fits in the table
  for (int i = 0; i <= L && v.ok; ++i)
    for (int k = 0; k <= K && v.ok; ++k) {
      if (trunc && i + k > L) continue;
      if (!trunc && k > L) continue;
      long long sum = 0;
      for (int j = 0; j <= L; ++j) sum += t.at(i, j, k);
      if (sum != t.valency(i)) fail("d", {i, k});
    }

  // (e) sum_l p_{i,j}^l p_{l,k}^m = sum_l p_{j,k}^l p_{i,l}^m
  for (int i = 0; i <= L && v.ok; ++i)
    for (int j = 0; j <= L && v.ok; ++j)
      for (int k = 0; k <= L && v.ok; ++k) {
        if (trunc && (i + j > L || j + k > L)) continue;
        for (int m = 0; m <= K && v.ok; ++m) {
          long long lhs = 0, rhs = 0;
          for (int l = 0; l <= L; ++l) {
            lhs += t.at(i, j, l) * t.at(l, k, m);
            rhs += t.at(j, k, l) * t.at(i, l, m);
          }
          if (lhs != rhs) fail("e", {i, j, k, m});
        }
      }

  // (f) p_{i,j}^k p_{k,k}^0 = p_{i,k}^j p_{j,j}^0
  for (int i = 0; i <= L && v.ok; ++i)
    for (int j = 0; j <= L && v.ok; ++j)
      for (int k = 0; k <= L && v.ok; ++k)
        if (t.at(i, j, k) * t.valency(k) != t.at(i, k, j) * t.valency(j))
          fail("f", {i, j, k});

  return v;
}

namespace {

using Matrix = std::vector<std::vector<long long>>;

Matrix distance_matrix(const std::vector<std::vector<int>>& D, int n, int i) {
  Matrix m(n, std::vector<long long>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (D[a][b] == i) m[a][b] = 1;
  return m;
}

Matrix multiply(const Matrix& x, const Matrix& y) {
  int n = static_cast<int>(x.size());
  Matrix out(n, std::vector<long long>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      if (x[a][c] == 0) continue;
      for (int b = 0; b < n; ++b) out[a][b] += x[a][c] * y[c][b];
    }
  return out;
}

}  // namespace

CrosscheckVerdict drg_coefficient_crosscheck(const FiniteGraph& g, int v0, Exec ex) {
  CrosscheckVerdict v;
  auto drg = check_distance_regular(g, ex);
  if (!drg.distance_regular) {
    v.ok = false;
    v.detail = "graph is not distance-regular";
    return v;
  }
  auto table = convolution_table(g, v0, ex);
  auto p = intersection_numbers(g, ex);
  int s = table.level_bound();

  for (int i = 0; i <= s; ++i)
    for (int j = 0; j <= s; ++j)
      for (int k = 0; k <= s; ++k)
        if (table.row(i, j).coefficient(k) != Rational(p.at(j, k, i), p.valency(j))) {
          v.ok = false;
          v.detail = "P_{" + std::to_string(i) + "," + std::to_string(j) + "}^" +
                     std::to_string(k) + " != p_{j,k}^i / p_{j,j}^0";
          return v;
        }

  if (g.order() <= 30) {
    auto D = all_pairs_distances(g, ex);
    int n = g.order();
    std::vector<Matrix> A;
    for (int i = 0; i <= s; ++i) A.push_back(distance_matrix(D, n, i));

    auto b_at = [&](int i) {
      return (i >= 0 && i < static_cast<int>(drg.array.b.size())) ? drg.array.b[i] : 0;
    };
    auto c_at = [&](int i) {
      return (i >= 1 && i <= static_cast<int>(drg.array.c.size())) ? drg.array.c[i - 1] : 0;
    };

    for (int i = 0; i <= s; ++i)
      for (int j = 0; j <= s; ++j) {
        auto M = multiply(A[i], A[j]);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            long long expect = p.at(i, j, D[a][b]);
            if (M[a][b] != expect) {
              v.ok = false;
              v.detail = "Bose-Mesner product A^" + std::to_string(i) + " A^" +
                         std::to_string(j) + " disagrees with p at entry (" +
                         std::to_string(a) + "," + std::to_string(b) + ")";
              return v;
            }
          }
        // normalized form: coefficient of C^(k) in C^(i)C^(j) equals p_{j,k}^i/p_{j,j}^0
        for (int k = 0; k <= s; ++k)
          if (Rational(p.at(i, j, k) * p.valency(k), p.valency(i)) !=
              Rational(p.at(j, k, i))) {
            v.ok = false;
            v.detail = "normalized Bose-Mesner coefficient mismatch";
            return v;
          }
      }

    for (int i = 0; i <= s; ++i) {
      auto M = multiply(A[i], A[1]);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          long long expect = 0;
          if (i - 1 >= 0 && D[a][b] == i - 1) expect += b_at(i - 1);
          if (D[a][b] == i) expect += b_at(0) - b_at(i) - c_at(i);
          if (i + 1 <= s && D[a][b] == i + 1) expect += c_at(i + 1);
          if (M[a][b] != expect) {
            v.ok = false;
            v.detail = "three-term recurrence fails at i=" + std::to_string(i);
            return v;
          }
        }
    }
    v.detail = "transform, matrix products and recurrence verified";
  } else {
    v.detail = "transform verified (graph too large for matrix materialization)";
  }
  return v;
}

CrosscheckVerdict drg_coefficient_crosscheck(const LazyGraph& g, const VertexKey& v0,
                                             int scope, Exec ex) {
  CrosscheckVerdict v;
  auto drg = check_distance_regular(g, scope, ex);
  if (!drg.distance_regular) {
    v.ok = false;
    v.detail = "graph is not distance-regular within the prefix";
    return v;
  }
  auto table = convolution_table(g, v0, scope, ex);
  auto p = intersection_numbers(g, v0, scope, ex);

  for (int i = 0; i <= scope; ++i)
    for (int j = 0; j <= scope; ++j)
      for (int k = 0; k <= std::min(i + j, scope); ++k)
        if (table.row(i, j).coefficient(k) != Rational(p.at(j, k, i), p.valency(j))) {
          v.ok = false;
          v.detail = "P_{" + std::to_string(i) + "," + std::to_string(j) + "}^" +
                     std::to_string(k) + " != p_{j,k}^i / p_{j,j}^0";
          return v;
        }
  v.detail = "transform verified on the certified prefix";
  return v;
}

std::optional<SrgParameters> srg_parameters(const FiniteGraph& g, Exec ex) {
  auto drg = check_distance_regular(g, ex);
  if (!drg.distance_regular || drg.array.s != 2) return std::nullopt;
  auto p = intersection_numbers(g, ex);
  SrgParameters out;
  out.n = g.order();
  out.k = p.valency(1);
  out.lambda = p.at(1, 1, 1);
  out.mu = p.at(1, 1, 2);
  return out;
}

int word_distance(const std::string& v, const std::string& w) {
  auto validate = [](const std::string& x) {
    if (x.empty()) throw usage_error("malformed word: empty");
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i] < 'a' || x[i] > 'c')
        throw usage_error("malformed word: letter outside {a,b,c}");
      if (i > 0 && x[i] == x[i - 1])
        throw usage_error("malformed word: repeated consecutive letter");
    }
  };
  validate(v);
  validate(w);
  size_t m = v.size(), n = w.size();
  size_t q = 0;
  while (q < std::min(m, n) && v[q] == w[q]) ++q;
  if (q == std::min(m, n)) return static_cast<int>(m > n ? m - n : n - m);
  return static_cast<int>(m + n - 2 * q - 1);
}

nlohmann::json scheme_report_json(const DrgVerdict& drg, const SchemeTable* p,
                                  const std::optional<SrgParameters>& srg) {
  nlohmann::json j;
  j["distance_regular"] = drg.distance_regular;
  if (drg.distance_regular) {
    j["intersection_array"] = {{"b", drg.array.b}, {"c", drg.array.c}};
    j["witness"] = nullptr;
  } else {
    j["intersection_array"] = nullptr;
    j["witness"] = {{"distance", drg.witness_distance},
                    {"kind", drg.witness_kind},
                    {"pair_a", drg.pair_a},
                    {"pair_b", drg.pair_b},
                    {"count_a", drg.count_a},
                    {"count_b", drg.count_b}};
  }
  if (p) {
    nlohmann::json pj = nlohmann::json::object();
    for (int i = 0; i <= p->index_bound(); ++i)
      for (int jj = 0; jj <= p->index_bound(); ++jj)
        for (int k = 0; k <= p->relation_bound(); ++k)
          if (p->at(i, jj, k) != 0)
            pj[std::to_string(i) + "," + std::to_string(jj) + "," + std::to_string(k)] =
                p->at(i, jj, k);
    j["p"] = pj;
  } else {
    j["p"] = nullptr;
  }
  if (srg)
    j["srg"] = {srg->n, srg->k, srg->lambda, srg->mu};
  else
    j["srg"] = nullptr;
  return j;
}

}  // namespace walkhg
