// Times the OpenMP kernels against their serial runs and, where feasible,
// against the plain per-coefficient reference path, verifying that all
// routes produce identical results.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "walkhg/convolution.hpp"
#include "walkhg/generators.hpp"
#include "walkhg/hypergroup.hpp"
#include "walkhg/scheme.hpp"

using namespace walkhg;

namespace {

double time_ms(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-42s serial %9.1f ms   parallel %9.1f ms   speedup %.2fx   %s\n",
              name.c_str(), serial_ms, parallel_ms, serial_ms / parallel_ms,
              equal ? "results equal" : "RESULTS DIFFER");
}

}  // namespace

int main() {
  {
    auto g = build_finite(parse_graph_spec("prism:90"));
    ConvolutionTable ts, tp;
    double s = time_ms([&] { ts = convolution_table(g, 0, Exec::serial); });
    double p = time_ms([&] { tp = convolution_table(g, 0, Exec::parallel); });
    report("convolution_table prism:90", s, p, ts == tp);

    // plain per-coefficient path on a smaller instance
    auto g2 = build_finite(parse_graph_spec("prism:16"));
    auto table = convolution_table(g2, 0, Exec::parallel);
    int top = table.level_bound();
    bool equal = true;
    double ref = time_ms([&] {
      for (int i = 0; i <= top && equal; ++i)
        for (int j = 0; j <= top && equal; ++j)
          for (int k = 0; k <= top && equal; ++k)
            equal = convolution_coefficient(g2, 0, i, j, k) == table.row(i, j).coefficient(k);
    });
    double tab = time_ms([&] { convolution_table(g2, 0, Exec::parallel); });
    std::printf("%-42s direct %9.1f ms   batched  %9.1f ms   speedup %.2fx   %s\n",
                "per-coefficient formula prism:16", ref, tab, ref / tab,
                equal ? "results equal" : "RESULTS DIFFER");
  }

  {
    auto g = build_lazy(parse_graph_spec("tree:3"));
    ConvolutionTable ts, tp;
    double s = time_ms([&] { ts = convolution_table(g, g.base(), 5, Exec::serial); });
    double p = time_ms([&] { tp = convolution_table(g, g.base(), 5, Exec::parallel); });
    report("convolution_table tree:3 L=5", s, p, ts == tp);
  }

  {
    auto g = build_finite(parse_graph_spec("prism:120"));
    DrgVerdict vs, vp;
    double s = time_ms([&] { vs = check_distance_regular(g, Exec::serial); });
    double p = time_ms([&] { vp = check_distance_regular(g, Exec::parallel); });
    report("check_distance_regular prism:120", s, p,
           vs.distance_regular == vp.distance_regular &&
               vs.witness_distance == vp.witness_distance);
  }

  {
    auto g = build_finite(parse_graph_spec("platonic:20"));
    SchemeTable ss, sp;
    double s = time_ms([&] { ss = intersection_numbers(g, Exec::serial); });
    double p = time_ms([&] { sp = intersection_numbers(g, Exec::parallel); });
    bool eq = true;
    for (int i = 0; i <= ss.index_bound() && eq; ++i)
      for (int j = 0; j <= ss.index_bound() && eq; ++j)
        for (int k = 0; k <= ss.relation_bound() && eq; ++k)
          eq = ss.at(i, j, k) == sp.at(i, j, k);
    report("intersection_numbers dodecahedron", s, p, eq);
  }

  {
    auto g = build_lazy(parse_graph_spec("ladder"));
    auto t = convolution_table(g, g.base(), 12, Exec::parallel);
    CheckVerdict vs, vp;
    double s = time_ms([&] { vs = check_associativity_full(t, Exec::serial); });
    double p = time_ms([&] { vp = check_associativity_full(t, Exec::parallel); });
    report("associativity ladder L=12", s, p, vs.ok == vp.ok);
  }

  {
    auto g = build_finite(parse_graph_spec("prism:40"));
    BasePointClassification cs, cp;
    double s = time_ms([&] { cs = classify_base_points(g, Exec::serial); });
    double p = time_ms([&] { cp = classify_base_points(g, Exec::parallel); });
    report("classify_base_points prism:40", s, p, cs.classes == cp.classes);
  }

  {
    auto g = build_finite(parse_graph_spec("prism:3"));
    McEstimate ms, mp;
    double s = time_ms([&] { ms = mc_estimate(g, 0, 1, 1, 4'000'000, 7, Exec::serial); });
    double p = time_ms([&] { mp = mc_estimate(g, 0, 1, 1, 4'000'000, 7, Exec::parallel); });
    report("mc_estimate prism:3 4M samples", s, p, ms.counts == mp.counts);
  }

  return 0;
}
