#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "walkhg/cli.hpp"

using namespace walkhg;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(int (*cmd)(const RunConfig&, std::ostream&, std::ostream&), RunConfig cfg) {
  std::ostringstream out, err;
  int code = cmd(cfg, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "cli_test_" + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("analyze renders the prism table") {
  RunConfig cfg;
  cfg.graph_spec = "prism:3";
  cfg.base = "0";
  auto r = run(cmd_analyze, cfg);
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("R_1 o R_1 = 1/3 R_0 + 2/9 R_1 + 4/9 R_2") != std::string::npos);
  CHECK(r.out.find("self-centered") != std::string::npos);
}

TEST_CASE("analyze emits the convolution JSON schema for lazy graphs") {
  RunConfig cfg;
  cfg.graph_spec = "ladder";
  cfg.base = "0,0";
  cfg.max_level = 3;
  cfg.format = "json";
  auto r = run(cmd_analyze, cfg);
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["base"] == "0,0");
  CHECK(j["max_level"] == 3);
  CHECK(j["exact"] == true);
  CHECK(j["rows"]["1,1"] == nlohmann::json({{0, "1/3"}, {2, "2/3"}}));
}

TEST_CASE("JSON reports round-trip byte-identically") {
  for (auto [cmd, spec] : std::initializer_list<
           std::pair<int (*)(const RunConfig&, std::ostream&, std::ostream&),
                     const char*>>{{cmd_analyze, "prism:4"},
                                   {cmd_check, "petersen"},
                                   {cmd_drg, "platonic:6"},
                                   {cmd_mc, "complete:4"}}) {
    RunConfig cfg;
    cfg.graph_spec = spec;
    cfg.format = "json";
    auto r = run(cmd, cfg);
    REQUIRE(r.code == kExitOk);
    std::string body = r.out.substr(0, r.out.find_last_not_of('\n') + 1);
    CHECK(nlohmann::json::parse(body).dump() == body);
  }
}

TEST_CASE("analyze refuses non-self-centered files with exit code 2") {
  auto path = write_temp("path3.json", R"({"n": 3, "edges": [[0,1],[1,2]]})");
  RunConfig cfg;
  cfg.graph_spec = "file:" + path;
  cfg.base = "1";
  auto r = run(cmd_analyze, cfg);
  CHECK(r.code == kExitRefused);
  CHECK(r.err.find("not self-centered") != std::string::npos);
}

TEST_CASE("file graphs work end to end") {
  auto path = write_temp("c5.txt", "5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  RunConfig cfg;
  cfg.graph_spec = "file:" + path;
  cfg.base = "2";
  auto r = run(cmd_analyze, cfg);
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("R_1 o R_1 = 1/2 R_0 + 1/2 R_2") != std::string::npos);
}

TEST_CASE("usage errors exit with code 3") {
  RunConfig cfg;
  cfg.graph_spec = "frobnicate:9";
  auto r = run(cmd_analyze, cfg);
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("valid specs") != std::string::npos);

  RunConfig mc;
  mc.graph_spec = "complete:4";
  mc.samples = 0;
  CHECK(run(cmd_mc, mc).code == kExitUsage);

  RunConfig search;
  search.order = 11;
  search.degree = 4;
  CHECK(run(cmd_search, search).code == kExitUsage);

  RunConfig base;
  base.graph_spec = "complete:4";
  base.base = "7";
  CHECK(run(cmd_analyze, base).code == kExitUsage);
}

TEST_CASE("check reports productivity and classes") {
  RunConfig cfg;
  cfg.graph_spec = "lineprism3";
  cfg.all_basepoints = true;
  cfg.format = "json";
  auto r = run(cmd_check, cfg);
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["productive"] == true);
  CHECK(j["classes"].size() == 2);

  RunConfig lattice;
  lattice.graph_spec = "lattice";
  lattice.max_level = 3;
  auto rl = run(cmd_check, lattice);
  CHECK(rl.code == kExitOk);
  CHECK(rl.out.find("not productive") != std::string::npos);
  CHECK(rl.out.find("associativity at (1,1,2)") != std::string::npos);

  RunConfig pet;
  pet.graph_spec = "petersen";
  pet.all_basepoints = true;
  auto rp = run(cmd_check, pet);
  CHECK(rp.out.find("productive") == 0);
  CHECK(rp.out.find("1 base-point class(es)") != std::string::npos);
}

TEST_CASE("drg subcommand") {
  RunConfig cfg;
  cfg.graph_spec = "tree:3";
  cfg.max_level = 5;
  auto r = run(cmd_drg, cfg);
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("b: 3 2 2 2 2") != std::string::npos);
  CHECK(r.out.find("c: 1 1 1 1 1") != std::string::npos);

  RunConfig cube;
  cube.graph_spec = "prism:4";
  auto rc = run(cmd_drg, cube);
  CHECK(rc.out.find("distance-regular") == 0);

  RunConfig k23;
  k23.graph_spec = "bipartite:2,3";
  k23.format = "json";
  auto rk = run(cmd_drg, k23);
  auto j = nlohmann::json::parse(rk.out);
  CHECK(j["distance_regular"] == false);
  CHECK(j["witness"]["kind"] == "degree");
  CHECK(j["intersection_array"].is_null());
  CHECK(j["srg"].is_null());

  RunConfig pet;
  pet.graph_spec = "petersen";
  pet.format = "json";
  auto rp = run(cmd_drg, pet);
  auto jp = nlohmann::json::parse(rp.out);
  CHECK(jp["srg"] == nlohmann::json({10, 3, 0, 1}));
}

TEST_CASE("mc subcommand is reproducible") {
  RunConfig cfg;
  cfg.graph_spec = "tree:3";
  cfg.base = "a";
  cfg.level_i = 1;
  cfg.level_j = 1;
  cfg.samples = 20000;
  cfg.seed = 7;
  cfg.format = "json";
  auto r1 = run(cmd_mc, cfg);
  auto r2 = run(cmd_mc, cfg);
  REQUIRE(r1.code == kExitOk);
  CHECK(r1.out == r2.out);
  auto j = nlohmann::json::parse(r1.out);
  CHECK(j["freq"].contains("0"));
  CHECK(j["freq"].contains("2"));
  CHECK_FALSE(j["freq"].contains("1"));
}

TEST_CASE("search subcommand") {
  RunConfig cfg;
  cfg.order = 6;
  cfg.degree = 3;
  cfg.productive_only = true;
  cfg.format = "json";
  auto r = run(cmd_search, cfg);
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 2);  // the triangular prism and K_{3,3}
}
