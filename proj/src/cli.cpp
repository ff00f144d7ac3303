#include "walkhg/cli.hpp"

#include <functional>
#include <ostream>

#include <json.hpp>

#include "walkhg/convolution.hpp"
#include "walkhg/errors.hpp"
#include "walkhg/generators.hpp"
#include "walkhg/hypergroup.hpp"
#include "walkhg/oracles.hpp"
#include "walkhg/scheme.hpp"

namespace walkhg {

namespace {

int run_guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const domain_refusal& e) {
    err << "refused: " << e.what() << "\n";
    return kExitRefused;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}

int parse_finite_base(const RunConfig& cfg, const FiniteGraph& g) {
  if (cfg.base.empty()) return 0;
  try {
    size_t used = 0;
    int v = std::stoi(cfg.base, &used);
    if (used != cfg.base.size()) throw std::invalid_argument(cfg.base);
    if (v < 0 || v >= g.order())
      throw usage_error("base vertex " + cfg.base + " out of range 0.." +
                        std::to_string(g.order() - 1));
    return v;
  } catch (const usage_error&) {
    throw;
  } catch (const std::exception&) {
    throw usage_error("base for a finite graph must be a vertex id, got '" + cfg.base +
                      "'");
  }
}

VertexKey parse_lazy_base(const RunConfig& cfg, const LazyGraph& g) {
  if (cfg.base.empty()) return g.base();
  return key_from_string(cfg.base);
}

std::string row_to_text(const ConvolutionRow& row) {
  if (row.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : row.entries()) {
    if (!s.empty()) s += " + ";
    s += c.str() + " R_" + std::to_string(k);
  }
  return s;
}

void print_table_text(std::ostream& out, const ConvolutionTable& t) {
  int top = t.from_finite_graph() ? t.level_bound() : t.pair_sum_bound();
  out << "level sizes:";
  for (int k = 0; k <= t.max_known_level(); ++k) out << " " << t.level_size(k);
  out << "\n";
  for (int i = 0; i <= top; ++i)
    for (int j = 0; j <= top; ++j) {
      if (!t.has_row(i, j)) continue;
      out << "R_" << i << " o R_" << j << " = " << row_to_text(t.row(i, j)) << "\n";
    }
}

void emit(std::ostream& out, const RunConfig& cfg, const nlohmann::json& j,
          const std::function<void()>& text) {
  if (cfg.format == "json")
    out << j.dump() << "\n";
  else
    text();
}

}  // namespace

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() {
    auto spec = parse_graph_spec(cfg.graph_spec);
    if (spec.is_finite()) {
      auto g = build_finite(spec);
      int v0 = parse_finite_base(cfg, g);
      auto m = metrics(g, cfg.exec);
      auto t = convolution_table(g, v0, cfg.exec);  // refuses non-self-centered
      emit(out, cfg, t.to_json(), [&]() {
        out << "graph " << cfg.graph_spec << ": " << g.order() << " vertices, "
            << g.edge_count() << " edges\n";
        out << "radius " << m.radius << ", diameter " << m.diameter
            << (m.self_centered ? ", self-centered" : "") << "\n";
        out << "base " << v0 << "\n";
        print_table_text(out, t);
      });
    } else {
      auto g = build_lazy(spec);
      auto v0 = parse_lazy_base(cfg, g);
      auto t = convolution_table(g, v0, cfg.max_level, cfg.exec);
      emit(out, cfg, t.to_json(), [&]() {
        out << "graph " << cfg.graph_spec << " truncated at level " << cfg.max_level
            << " (ball radius " << 2 * cfg.max_level << ")\n";
        out << "base " << key_to_string(v0) << "\n";
        print_table_text(out, t);
      });
    }
    return kExitOk;
  });
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() {
    auto spec = parse_graph_spec(cfg.graph_spec);
    nlohmann::json report;
    ProductivityVerdict verdict;
    std::string classes_text;
    if (spec.is_finite()) {
      auto g = build_finite(spec);
      RunConfig local = cfg;
      if (cfg.base == "all") {  // base selector "all" = classify every base point
        local.base.clear();
        local.all_basepoints = true;
      }
      int v0 = parse_finite_base(local, g);
      verdict = productivity(g, v0, cfg.exec);
      report = verdict.to_json();
      if (local.all_basepoints && verdict.failures.empty()) {
        auto cls = classify_base_points(g, cfg.exec);
        report["classes"] = cls.to_json();
        classes_text = std::to_string(cls.classes.size()) + " base-point class(es)";
      } else if (local.all_basepoints) {
        classes_text = "classification skipped (not productive)";
      }
    } else {
      auto g = build_lazy(spec);
      auto v0 = parse_lazy_base(cfg, g);
      verdict = productivity(g, v0, cfg.max_level, cfg.exec);
      report = verdict.to_json();
    }
    emit(out, cfg, report, [&]() {
      out << (verdict.productive ? "productive" : "not productive");
      if (verdict.truncated) out << " (certified up to level " << verdict.scope << ")";
      out << "\n";
      for (const auto& f : verdict.failures) {
        out << "failure: " << f.axiom << " at (";
        for (size_t k = 0; k < f.witness.size(); ++k)
          out << (k ? "," : "") << f.witness[k];
        out << ")";
        if (!f.lhs.empty() || !f.rhs.empty())
          out << ": " << row_to_text(f.lhs) << "  vs  " << row_to_text(f.rhs);
        out << "\n";
      }
      if (!classes_text.empty()) out << classes_text << "\n";
    });
    return kExitOk;
  });
}

int cmd_drg(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() {
    auto spec = parse_graph_spec(cfg.graph_spec);
    DrgVerdict drg;
    std::optional<SchemeTable> p;
    std::optional<SrgParameters> srg;
    if (spec.is_finite()) {
      auto g = build_finite(spec);
      drg = check_distance_regular(g, cfg.exec);
      if (drg.distance_regular) {
        p = intersection_numbers(g, cfg.exec);
        srg = srg_parameters(g, cfg.exec);
      }
    } else {
      auto g = build_lazy(spec);
      drg = check_distance_regular(g, cfg.max_level, cfg.exec);
      if (drg.distance_regular)
        p = intersection_numbers(g, g.base(), cfg.max_level, cfg.exec);
    }
    auto report = scheme_report_json(drg, p ? &*p : nullptr, srg);
    emit(out, cfg, report, [&]() {
      if (drg.distance_regular) {
        out << "distance-regular" << (drg.array.truncated ? " (certified prefix)" : "")
            << "\n";
        out << "b:";
        for (auto x : drg.array.b) out << " " << x;
        out << "\nc:";
        for (auto x : drg.array.c) out << " " << x;
        out << "\n";
        if (srg)
          out << "strongly regular (" << srg->n << "," << srg->k << "," << srg->lambda
              << "," << srg->mu << ")\n";
      } else {
        out << "not distance-regular: " << drg.witness_kind << "-count at distance "
            << drg.witness_distance << " differs between pair (" << drg.pair_a[0]
            << " ~ " << drg.pair_a[1] << ") -> " << drg.count_a << " and pair ("
            << drg.pair_b[0] << " ~ " << drg.pair_b[1] << ") -> " << drg.count_b
            << "\n";
      }
    });
    return kExitOk;
  });
}

int cmd_mc(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() {
    auto spec = parse_graph_spec(cfg.graph_spec);
    McEstimate est;
    if (spec.is_finite()) {
      auto g = build_finite(spec);
      est = mc_estimate(g, parse_finite_base(cfg, g), cfg.level_i, cfg.level_j,
                        cfg.samples, cfg.seed, cfg.exec);
    } else {
      auto g = build_lazy(spec);
      est = mc_estimate(g, parse_lazy_base(cfg, g), cfg.level_i, cfg.level_j, cfg.samples,
                        cfg.seed, cfg.exec);
    }
    emit(out, cfg, est.to_json(), [&]() {
      out << "two-jump experiment i=" << est.i << " j=" << est.j << " samples "
          << est.samples << " seed " << est.seed << "\n";
      for (const auto& [k, c] : est.counts)
        out << "k=" << k << ": " << Rational(c, est.samples).str() << " (" << c << ")\n";
    });
    return kExitOk;
  });
}

int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() {
    std::function<bool(const FiniteGraph&)> predicate;
    if (cfg.productive_only)
      predicate = [&](const FiniteGraph& g) {
        if (!check_well_defined(g, Exec::serial).well_defined) return false;
        auto cls = classify_base_points(g, Exec::serial);
        for (size_t c = 0; c < cls.classes.size(); ++c)
          if (!productivity(g, cls.classes[c][0], Exec::serial).productive) return false;
        return true;
      };
    auto found = search_graphs(cfg.order, cfg.degree, predicate, cfg.exec);

    nlohmann::json report;
    report["order"] = cfg.order;
    report["degree"] = cfg.degree;
    report["productive_only"] = cfg.productive_only;
    report["count"] = found.size();
    report["graphs"] = nlohmann::json::array();
    for (const auto& g : found) {
      nlohmann::json entry;
      entry["edges"] = nlohmann::json::array();
      for (auto [a, b] : g.edges()) entry["edges"].push_back({a, b});
      report["graphs"].push_back(entry);
    }
    emit(out, cfg, report, [&]() {
      out << found.size() << " graph(s) of order " << cfg.order << ", degree "
          << cfg.degree << (cfg.productive_only ? ", hypergroup productive" : "") << "\n";
      for (size_t idx = 0; idx < found.size(); ++idx) {
        out << "#" << idx << ":";
        for (auto [a, b] : found[idx].edges()) out << " " << a << "-" << b;
        out << "\n";
      }
    });
    return kExitOk;
  });
}

nlohmann::json McEstimate::to_json() const {
  nlohmann::json report;
  report["i"] = i;
  report["j"] = j;
  report["samples"] = samples;
  report["seed"] = seed;
  nlohmann::json freq = nlohmann::json::object();
  for (const auto& [k, c] : counts) freq[std::to_string(k)] = Rational(c, samples).str();
  report["freq"] = freq;
  nlohmann::json cnt = nlohmann::json::object();
  for (const auto& [k, c] : counts) cnt[std::to_string(k)] = c;
  report["counts"] = cnt;
  return report;
}

}  // namespace walkhg
