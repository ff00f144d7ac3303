#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "walkhg/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"hypergroups from random walks on finite and infinite graphs"};
  app.require_subcommand(1);

  walkhg::RunConfig cfg;
  bool serial = false;

  auto add_common = [&](CLI::App* sub, bool needs_graph) {
    if (needs_graph)
      sub->add_option("--graph", cfg.graph_spec,
                      "graph spec, e.g. prism:5, tree:3, ladder, file:g.json")
          ->required();
    sub->add_option("--format", cfg.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--serial", serial, "disable the OpenMP kernels");
  };

  auto* analyze = app.add_subcommand("analyze", "metrics, partition, convolution table");
  add_common(analyze, true);
  analyze->add_option("--base", cfg.base, "base point (vertex id or key)");
  analyze->add_option("--max-level", cfg.max_level, "truncation level for infinite graphs");

  auto* check = app.add_subcommand("check", "hypergroup productivity verdict");
  add_common(check, true);
  check->add_option("--base", cfg.base, "base point (vertex id or key)");
  check->add_option("--max-level", cfg.max_level, "certification level for infinite graphs");
  check->add_flag("--all-basepoints", cfg.all_basepoints, "classify base points by table");

  auto* drg = app.add_subcommand("drg", "distance-regularity and association scheme");
  add_common(drg, true);
  drg->add_option("--max-level", cfg.max_level, "prefix bound for infinite graphs");

  auto* mc = app.add_subcommand("mc", "seeded Monte Carlo of the two-jump experiment");
  add_common(mc, true);
  mc->add_option("--base", cfg.base, "base point (vertex id or key)");
  mc->add_option("--i", cfg.level_i, "first jump level");
  mc->add_option("--j", cfg.level_j, "second jump level");
  mc->add_option("--samples", cfg.samples, "number of samples");
  mc->add_option("--seed", cfg.seed, "PRNG seed");

  auto* search = app.add_subcommand("search", "exhaustive regular-graph search");
  add_common(search, false);
  search->add_option("--order", cfg.order, "number of vertices (<= 10)")->required();
  search->add_option("--degree", cfg.degree, "regular degree")->required();
  search->add_flag("--productive", cfg.productive_only,
                   "keep only hypergroup productive graphs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? walkhg::kExitOk : walkhg::kExitUsage;
  }

  cfg.exec = serial ? walkhg::Exec::serial : walkhg::Exec::parallel;

  if (analyze->parsed()) return walkhg::cmd_analyze(cfg, std::cout, std::cerr);
  if (check->parsed()) return walkhg::cmd_check(cfg, std::cout, std::cerr);
  if (drg->parsed()) return walkhg::cmd_drg(cfg, std::cout, std::cerr);
  if (mc->parsed()) return walkhg::cmd_mc(cfg, std::cout, std::cerr);
  if (search->parsed()) return walkhg::cmd_search(cfg, std::cout, std::cerr);
  return walkhg::kExitUsage;
}
