#include "walkhg/hypergroup.hpp"

#include <algorithm>
#include <optional>

#include "walkhg/errors.hpp"

namespace walkhg {

namespace {

std::vector<Rational> scaled_row_sum(const ConvolutionTable& t, const ConvolutionRow& outer,
                                     bool outer_is_left, int other, int dense_size) {
  std::vector<Rational> acc(dense_size, Rational(0));
  for (const auto& [l, coef] : outer.entries()) {
    const ConvolutionRow& inner = outer_is_left ? t.row(l, other) : t.row(other, l);
    for (const auto& [k, c] : inner.entries()) acc[k] += coef * c;
  }
  return acc;
}

}  // namespace

std::pair<ConvolutionRow, ConvolutionRow> associativity_sides(const ConvolutionTable& t,
                                                              int h, int i, int j) {
  int size = h + i + j + 1;
  // (R_h . R_i) . R_j = sum_l P_{h,i}^l (R_l . R_j)
  auto lhs = scaled_row_sum(t, t.row(h, i), true, j, size);
  // R_h . (R_i . R_j) = sum_l P_{i,j}^l (R_h . R_l)
  auto rhs = scaled_row_sum(t, t.row(i, j), false, h, size);
  return {ConvolutionRow::from_dense(lhs), ConvolutionRow::from_dense(rhs)};
}

CheckVerdict audit_row_axioms(const ConvolutionTable& t) {
  CheckVerdict v;
  int top = t.from_finite_graph() ? t.level_bound() : t.pair_sum_bound();
  Rational one(1);
  for (int i = 0; i <= top; ++i)
    for (int j = 0; j <= top; ++j) {
      if (!t.has_row(i, j)) continue;
      const auto& row = t.row(i, j);
      if (row.total_mass() != one) {
        v.ok = false;
        v.failures.push_back({"unit-mass", {i, j}, row, ConvolutionRow{}});
        return v;
      }
      bool support_ok = !row.empty() && row.min_index() >= std::abs(i - j) &&
                        row.max_index() <= i + j;
      bool r0_ok = (i == j) ? row.coefficient(0).is_positive()
                            : row.coefficient(0).is_zero();
      if (!support_ok || !r0_ok) {
        v.ok = false;
        v.failures.push_back({"support-criterion", {i, j}, row, ConvolutionRow{}});
        return v;
      }
    }
  return v;
}

CheckVerdict check_commutativity(const ConvolutionTable& t, Exec ex) {
  int top = t.from_finite_graph() ? t.level_bound() : t.pair_sum_bound();
  std::optional<std::pair<int, int>> witness;
#pragma omp parallel for schedule(dynamic) if (parallel_on(ex))
  for (int i = 0; i <= top; ++i) {
    std::optional<std::pair<int, int>> local;
    for (int j = i + 1; j <= top; ++j) {
      if (!t.has_row(i, j)) continue;
      if (t.row(i, j) != t.row(j, i)) {
        local = {i, j};
        break;
      }
    }
    if (local) {
#pragma omp critical
      if (!witness || *local < *witness) witness = local;
    }
  }
  CheckVerdict v;
  if (witness) {
    v.ok = false;
    v.failures.push_back({"commutativity",
                          {witness->first, witness->second},
                          t.row(witness->first, witness->second),
                          t.row(witness->second, witness->first)});
  }
  return v;
}

namespace {

CheckVerdict check_associativity(const ConvolutionTable& t, Exec ex, int triple_bound,
                                 bool reduced) {
  bool finite = t.from_finite_graph();
  int top = finite ? t.level_bound() : t.pair_sum_bound();
  if (triple_bound < 0) triple_bound = finite ? 3 * top : top;
  if (!finite && triple_bound > t.pair_sum_bound())
    throw scope_error("associativity up to triple sum " + std::to_string(triple_bound) +
                      " needs a table with pair-sum bound >= " +
                      std::to_string(triple_bound) + ", have " +
                      std::to_string(t.pair_sum_bound()));

  auto in_scope = [&](int h, int i, int j) {
    if (finite) return h <= top && i <= top && j <= top && h + i + j <= triple_bound;
    return h + i + j <= triple_bound;
  };

  int h_max = reduced ? 1 : (finite ? top : triple_bound);
  int h_min = reduced ? 1 : 0;
  std::optional<std::array<int, 3>> witness;
#pragma omp parallel for schedule(dynamic) if (parallel_on(ex))
  for (int h = h_min; h <= h_max; ++h) {
    std::optional<std::array<int, 3>> local;
    int ij_top = finite ? top : triple_bound;
    for (int i = 0; i <= ij_top && !local; ++i)
      for (int j = 0; j <= ij_top && !local; ++j) {
        if (!in_scope(h, i, j)) continue;
        auto [lhs, rhs] = associativity_sides(t, h, i, j);
        if (lhs != rhs) local = {h, i, j};
      }
    if (local) {
#pragma omp critical
      if (!witness || *local < *witness) witness = local;
    }
  }

  CheckVerdict v;
  if (reduced)
    v.note = "reduced check: commutativity plus h=1 associativity implies the rest";
  if (witness) {
    auto [h, i, j] = *witness;
    auto [lhs, rhs] = associativity_sides(t, h, i, j);
    v.ok = false;
    v.failures.push_back({"associativity", {h, i, j}, lhs, rhs});
  }
  return v;
}

}  // namespace

CheckVerdict check_associativity_full(const ConvolutionTable& t, Exec ex,
                                      int triple_bound) {
  return check_associativity(t, ex, triple_bound, false);
}

CheckVerdict check_associativity_reduced(const ConvolutionTable& t, Exec ex,
                                         int triple_bound) {
  return check_associativity(t, ex, triple_bound, true);
}

namespace {

ProductivityVerdict verdict_from_table(const ConvolutionTable& t, int scope,
                                       bool truncated, Exec ex) {
  ProductivityVerdict v;
  v.scope = scope;
  v.truncated = truncated;

  auto audit = audit_row_axioms(t);
  auto comm = check_commutativity(t, ex);
  auto assoc = check_associativity_full(t, ex);
  for (auto* c : {&audit, &comm, &assoc})
    for (auto& f : c->failures) v.failures.push_back(f);
  v.productive = v.failures.empty();
  return v;
}

}  // namespace

ProductivityVerdict productivity(const FiniteGraph& g, int v0, Exec ex) {
  auto wd = check_well_defined(g, ex);
  if (!wd.well_defined) {
    ProductivityVerdict v;
    v.productive = false;
    v.scope = wd.diameter;
    v.failures.push_back(
        {"self-centered", {wd.witness}, ConvolutionRow{}, ConvolutionRow{}});
    return v;
  }
  auto t = convolution_table(g, v0, ex);
  return verdict_from_table(t, t.level_bound(), false, ex);
}

ProductivityVerdict productivity(const LazyGraph& g, const VertexKey& v0, int max_level,
                                 Exec ex) {
  auto t = convolution_table(g, v0, max_level, ex);
  return verdict_from_table(t, max_level, true, ex);
}

BasePointClassification classify_base_points(const FiniteGraph& g, Exec ex) {
  auto wd = check_well_defined(g, ex);
  if (!wd.well_defined) throw domain_refusal(wd.diagnostic());

  int n = g.order();
  std::vector<ConvolutionTable> tables(n);
#pragma omp parallel for schedule(dynamic) if (parallel_on(ex))
  for (int v = 0; v < n; ++v) tables[v] = convolution_table(g, v, Exec::serial);

  BasePointClassification out;
  std::vector<std::string> keys(n);
  for (int v = 0; v < n; ++v) keys[v] = tables[v].to_json()["rows"].dump();
  std::vector<int> cls(n, -1);
  for (int v = 0; v < n; ++v) {
    if (cls[v] >= 0) continue;
    int id = static_cast<int>(out.classes.size());
    out.classes.emplace_back();
    out.tables.push_back(tables[v]);
    for (int w = v; w < n; ++w)
      if (cls[w] < 0 && keys[w] == keys[v]) {
        cls[w] = id;
        out.classes[id].push_back(w);
      }
  }
  return out;
}

nlohmann::json failure_to_json(const AxiomFailure& f) {
  nlohmann::json j;
  j["axiom"] = f.axiom;
  j["witness"] = f.witness;
  j["lhs"] = row_to_json(f.lhs);
  j["rhs"] = row_to_json(f.rhs);
  return j;
}

nlohmann::json ProductivityVerdict::to_json() const {
  nlohmann::json j;
  j["productive"] = productive;
  j["scope"] = scope;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : failures) j["failures"].push_back(failure_to_json(f));
  j["classes"] = nlohmann::json::array();
  return j;
}

nlohmann::json BasePointClassification::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (size_t c = 0; c < classes.size(); ++c) {
    nlohmann::json entry;
    entry["vertices"] = classes[c];
    entry["rows"] = tables[c].to_json()["rows"];
    j.push_back(entry);
  }
  return j;
}

}  // namespace walkhg
