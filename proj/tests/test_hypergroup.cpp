#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "walkhg/errors.hpp"
#include "walkhg/generators.hpp"
#include "walkhg/hypergroup.hpp"

using namespace walkhg;

TEST_CASE("commutativity holds on distance-regular and prism tables") {
  for (const char* spec : {"petersen", "prism:5", "platonic:8", "bipartite:2,3"}) {
    auto g = build_finite(parse_graph_spec(spec));
    auto t = convolution_table(g, 0);
    CHECK(check_commutativity(t).ok);
  }
}

TEST_CASE("full associativity on hypergroup productive graphs") {
  for (const char* spec : {"petersen", "prism:6", "bipartite:2,3", "lineprism3"}) {
    auto g = build_finite(parse_graph_spec(spec));
    auto t = convolution_table(g, 0);
    CHECK(check_associativity_full(t).ok);
  }
  // K_{2,3} from both base classes
  auto k23 = build_finite(parse_graph_spec("bipartite:2,3"));
  CHECK(check_associativity_full(convolution_table(k23, 0)).ok);
  CHECK(check_associativity_full(convolution_table(k23, 2)).ok);
}

TEST_CASE("square lattice is not associative and carries a concrete witness") {
  auto lattice = build_lazy(parse_graph_spec("lattice"));
  auto t = convolution_table(lattice, lattice.base(), 3);
  auto v = check_associativity_full(t);
  REQUIRE_FALSE(v.ok);
  REQUIRE(v.failures.size() == 1);
  const auto& f = v.failures[0];
  CHECK(f.axiom == "associativity");
  CHECK(f.witness == std::vector<int>{1, 1, 2});

  // the witness reproduces: re-expanding the triple gives the same two sides
  auto [lhs, rhs] = associativity_sides(t, f.witness[0], f.witness[1], f.witness[2]);
  CHECK(lhs == f.lhs);
  CHECK(rhs == f.rhs);
  CHECK(lhs != rhs);
  CHECK(lhs.coefficient(2) == Rational(17, 32));
  CHECK(rhs.coefficient(2) == Rational(13, 24));
}

TEST_CASE("reduced and full associativity agree on finite test graphs") {
  for (const char* spec : {"prism:3", "prism:4", "prism:5", "prism:6", "prism:7",
                           "bipartite:2,3", "petersen", "lineprism3", "platonic:6"}) {
    auto g = build_finite(parse_graph_spec(spec));
    auto t = convolution_table(g, 0);
    CHECK(check_associativity_reduced(t).ok == check_associativity_full(t).ok);
  }
}

TEST_CASE("reduced associativity on infinite graphs") {
  auto ladder = build_lazy(parse_graph_spec("ladder"));
  auto lt = convolution_table(ladder, ladder.base(), 4);
  CHECK(check_associativity_reduced(lt).ok);

  auto cyl3 = build_lazy(parse_graph_spec("cylinder:3"));
  auto ct = convolution_table(cyl3, cyl3.base(), 3);
  CHECK_FALSE(check_associativity_reduced(ct).ok);
}

TEST_CASE("associativity beyond the certified depth is refused") {
  auto ladder = build_lazy(parse_graph_spec("ladder"));
  auto t = convolution_table(ladder, ladder.base(), 2);
  CHECK_THROWS_AS(check_associativity_full(t, Exec::parallel, 5), scope_error);
  CHECK(check_associativity_full(t, Exec::parallel, 4).ok);
}

TEST_CASE("productivity pipeline") {
  auto icosa = build_finite(parse_graph_spec("platonic:12"));
  auto v = productivity(icosa, 0);
  CHECK(v.productive);
  CHECK(v.failures.empty());

  FiniteGraph path3(3, {{0, 1}, {1, 2}});
  auto bad = productivity(path3, 0);
  CHECK_FALSE(bad.productive);
  REQUIRE(bad.failures.size() == 1);
  CHECK(bad.failures[0].axiom == "self-centered");
  CHECK(bad.failures[0].witness == std::vector<int>{1});

  auto lattice = build_lazy(parse_graph_spec("lattice"));
  auto lv = productivity(lattice, lattice.base(), 3);
  CHECK_FALSE(lv.productive);
  CHECK(lv.truncated);
  CHECK(lv.scope == 3);
}

TEST_CASE("base point classification") {
  auto p5 = build_finite(parse_graph_spec("prism:5"));
  CHECK(classify_base_points(p5).classes.size() == 1);

  auto lp3 = build_finite(parse_graph_spec("lineprism3"));
  auto cls = classify_base_points(lp3);
  REQUIRE(cls.classes.size() == 2);
  // 6 triangle edges and 3 rungs
  std::vector<size_t> sizes = {cls.classes[0].size(), cls.classes[1].size()};
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{3, 6});

  auto k23 = build_finite(parse_graph_spec("bipartite:2,3"));
  auto c23 = classify_base_points(k23);
  REQUIRE(c23.classes.size() == 2);
  CHECK(c23.classes[0] == std::vector<int>{0, 1});
  CHECK(c23.classes[1] == std::vector<int>{2, 3, 4});

  // equal side sizes collapse the two classes into one
  auto k33 = build_finite(parse_graph_spec("bipartite:3,3"));
  CHECK(classify_base_points(k33).classes.size() == 1);

  CHECK_THROWS_AS(classify_base_points(FiniteGraph(3, {{0, 1}, {1, 2}})), domain_refusal);
}

TEST_CASE("distance-regular graphs produce one class and a hypergroup") {
  for (const char* spec : {"complete:5", "platonic:4", "platonic:6", "platonic:8",
                           "petersen", "cycle:6"}) {
    auto g = build_finite(parse_graph_spec(spec));
    CHECK_MESSAGE(productivity(g, 0).productive, spec);
    CHECK_MESSAGE(classify_base_points(g).classes.size() == 1, spec);
  }
}

TEST_CASE("infinite positives are certified productive up to the level bound") {
  for (const char* spec : {"tree:3", "linked-triangle", "ladder"}) {
    auto g = build_lazy(parse_graph_spec(spec));
    auto v = productivity(g, g.base(), 4);
    CHECK_MESSAGE(v.productive, spec);
    CHECK(v.truncated);
    CHECK(v.scope == 4);
  }
}

TEST_CASE("the single-vertex graph carries the trivial hypergroup") {
  FiniteGraph k1(1, {});
  auto v = productivity(k1, 0);
  CHECK(v.productive);
  CHECK(v.scope == 0);
  auto t = convolution_table(k1, 0);
  CHECK(t.row(0, 0) == ConvolutionRow::point_mass(0));
  CHECK(classify_base_points(k1).classes.size() == 1);
}

TEST_CASE("shared instances are safe to use from several threads") {
  auto g = build_finite(parse_graph_spec("prism:6"));
  auto reference = convolution_table(g, 0);
  std::vector<std::thread> workers;
  std::vector<char> agree(4, 0);
  for (int w = 0; w < 4; ++w)
    workers.emplace_back([&, w]() {
      auto t = convolution_table(g, 0, Exec::serial);
      agree[w] = (t == reference) && productivity(g, 0, Exec::serial).productive;
    });
  for (auto& th : workers) th.join();
  for (char ok : agree) CHECK(ok == 1);
}

TEST_CASE("vertex-transitive families give the same table at every base point") {
  for (const char* spec : {"prism:6", "prism:7", "cycle:8"}) {
    auto g = build_finite(parse_graph_spec(spec));
    auto t0 = convolution_table(g, 0);
    for (int v = 1; v < g.order(); ++v) CHECK(convolution_table(g, v) == t0);
  }
}

TEST_CASE("serial and parallel checkers agree") {
  auto lattice = build_lazy(parse_graph_spec("lattice"));
  auto t = convolution_table(lattice, lattice.base(), 3);
  auto vs = check_associativity_full(t, Exec::serial);
  auto vp = check_associativity_full(t, Exec::parallel);
  REQUIRE(vs.failures.size() == vp.failures.size());
  CHECK(vs.failures[0].witness == vp.failures[0].witness);

  auto lp3 = build_finite(parse_graph_spec("lineprism3"));
  auto cs = classify_base_points(lp3, Exec::serial);
  auto cp = classify_base_points(lp3, Exec::parallel);
  CHECK(cs.classes == cp.classes);
}

TEST_CASE("verdict JSON carries failures and scope") {
  auto lattice = build_lazy(parse_graph_spec("lattice"));
  auto v = productivity(lattice, lattice.base(), 3);
  auto j = v.to_json();
  CHECK(j["productive"] == false);
  CHECK(j["scope"] == 3);
  REQUIRE(j["failures"].size() >= 1);
  bool found = false;
  for (const auto& f : j["failures"])
    if (f["axiom"] == "associativity" && f["witness"] == nlohmann::json({1, 1, 2}))
      found = true;
  CHECK(found);
}
