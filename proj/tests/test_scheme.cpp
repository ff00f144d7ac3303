#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "walkhg/errors.hpp"
#include "walkhg/generators.hpp"
#include "walkhg/scheme.hpp"

using namespace walkhg;

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("distance-regularity of named finite graphs") {
  auto k6 = build_finite(parse_graph_spec("complete:6"));
  auto v = check_distance_regular(k6);
  REQUIRE(v.distance_regular);
  CHECK(v.array.b == std::vector<long long>{5});
  CHECK(v.array.c == std::vector<long long>{1});

  auto cube = check_distance_regular(build_finite(parse_graph_spec("prism:4")));
  REQUIRE(cube.distance_regular);
  CHECK(cube.array.b == std::vector<long long>{3, 2, 1});
  CHECK(cube.array.c == std::vector<long long>{1, 2, 3});

  auto icosa = check_distance_regular(build_finite(parse_graph_spec("platonic:12")));
  REQUIRE(icosa.distance_regular);
  CHECK(icosa.array.b == std::vector<long long>{5, 2, 1});
  CHECK(icosa.array.c == std::vector<long long>{1, 2, 5});

  auto dodeca = check_distance_regular(build_finite(parse_graph_spec("platonic:20")));
  REQUIRE(dodeca.distance_regular);
  CHECK(dodeca.array.b == std::vector<long long>{3, 2, 1, 1, 1});
  CHECK(dodeca.array.c == std::vector<long long>{1, 1, 1, 2, 3});

  auto p3 = check_distance_regular(build_finite(parse_graph_spec("prism:3")));
  CHECK_FALSE(p3.distance_regular);
  CHECK(p3.witness_distance >= 1);
  CHECK((p3.witness_kind == "b" || p3.witness_kind == "c"));
  CHECK(p3.count_a != p3.count_b);

  auto k23 = check_distance_regular(build_finite(parse_graph_spec("bipartite:2,3")));
  CHECK_FALSE(k23.distance_regular);
  CHECK(k23.witness_kind == "degree");
}

TEST_CASE("prisms are distance-regular exactly at n=4") {
  for (int n = 3; n <= 10; ++n) {
    auto g = build_finite(parse_graph_spec("prism:" + std::to_string(n)));
    CHECK(check_distance_regular(g).distance_regular == (n == 4));
  }
}

TEST_CASE("infinite prefixes: trees and the linked-triangle graph") {
  for (int n = 2; n <= 4; ++n) {
    auto g = build_lazy(parse_graph_spec("tree:" + std::to_string(n)));
    auto v = check_distance_regular(g, 5);
    REQUIRE(v.distance_regular);
    CHECK(v.array.truncated);
    CHECK(v.array.b == std::vector<long long>{n, n - 1, n - 1, n - 1, n - 1});
    CHECK(v.array.c == std::vector<long long>{1, 1, 1, 1, 1});
  }

  auto lt = build_lazy(parse_graph_spec("linked-triangle"));
  auto v = check_distance_regular(lt, 5);
  REQUIRE(v.distance_regular);
  CHECK(v.array.b == std::vector<long long>{4, 2, 2, 2, 2});
  CHECK(v.array.c == std::vector<long long>{1, 1, 1, 1, 1});

  // the ladder is not distance-regular: some pairs at distance 2 share two
  // neighbors with the midpoint, some only one
  auto ladder = build_lazy(parse_graph_spec("ladder"));
  CHECK_FALSE(check_distance_regular(ladder, 3).distance_regular);
}

TEST_CASE("intersection numbers of K_4") {
  auto p = intersection_numbers(build_finite(parse_graph_spec("complete:4")));
  CHECK(p.at(0, 0, 0) == 1);
  CHECK(p.at(1, 1, 0) == 3);
  CHECK(p.at(1, 1, 1) == 2);
  CHECK(p.at(0, 1, 1) == 1);
  CHECK(p.at(0, 1, 0) == 0);
}

TEST_CASE("tree and linked-triangle valencies match the closed forms") {
  for (int n = 2; n <= 4; ++n) {
    auto g = build_lazy(parse_graph_spec("tree:" + std::to_string(n)));
    auto p = intersection_numbers(g, g.base(), 4);
    for (int i = 1; i <= 4; ++i) CHECK(p.valency(i) == n * ipow(n - 1, i - 1));
  }
  auto lt = build_lazy(parse_graph_spec("linked-triangle"));
  auto p = intersection_numbers(lt, lt.base(), 4);
  for (int i = 1; i <= 4; ++i) CHECK(p.valency(i) == ipow(2, i + 1));
}

TEST_CASE("full closed forms for the infinite families, i,j <= 4, k <= 8") {
  // The tree formula covers k >= 1; the k = 0 layer is delta_{ij} times the
  // valency. The linked-triangle cases are accumulated where indices
  // coincide (at k = 0 the |i-k| and i+k branches merge).
  for (int n = 2; n <= 4; ++n) {
    auto g = build_lazy(parse_graph_spec("tree:" + std::to_string(n)));
    auto p = intersection_numbers(g, g.base(), 4);
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; j <= 4; ++j)
        for (int k = 1; k <= 8; ++k) {
          long long expect = 0;
          if (i == 0)
            expect = (j == k) ? 1 : 0;
          else if (j == 0)
            expect = (i == k) ? 1 : 0;
          else if (j == i + k)
            expect = ipow(n - 1, i);
          else if (j == std::abs(i - k))
            expect = ipow(n - 1, i - std::min(i, k));
          else if ((i + k - j) % 2 == 0 && j > std::abs(i - k) && j < i + k)
            expect = (n - 2) * ipow(n - 1, i - (i + k - j) / 2 - 1);
          CHECK_MESSAGE(p.at(i, j, k) == expect, "tree n=", n, " p(", i, ",", j, ",", k, ")");
        }
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; j <= 4; ++j)
        CHECK(p.at(i, j, 0) == (i == j ? (i ? n * ipow(n - 1, i - 1) : 1) : 0));
  }

  auto lt = build_lazy(parse_graph_spec("linked-triangle"));
  auto p = intersection_numbers(lt, lt.base(), 4);
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j)
      for (int k = 0; k <= 8; ++k) {
        long long expect = 0;
        if (i == 0)
          expect = (j == k) ? 1 : 0;
        else if (j == 0)
          expect = (i == k) ? 1 : 0;
        else {
          if (j == i + k) expect += ipow(2, i);
          if (j == std::abs(i - k)) expect += ipow(2, std::max(i - k, 0));
          if ((j - std::abs(i - k)) % 2 == 1) {
            int h = (j - std::abs(i - k) + 1) / 2;
            if (h >= 1 && h <= std::min(i, k))
              expect += ipow(2, std::max(i - k, 0) + h - 1);
          }
        }
        CHECK_MESSAGE(p.at(i, j, k) == expect, "lt p(", i, ",", j, ",", k, ")");
      }
}

TEST_CASE("non-schemes raise with witness pairs") {
  CHECK_THROWS_AS(intersection_numbers(build_finite(parse_graph_spec("prism:3"))),
                  not_a_scheme_error);
  CHECK_THROWS_AS(intersection_numbers(build_finite(parse_graph_spec("bipartite:2,3"))),
                  not_a_scheme_error);
}

TEST_CASE("DRG holds iff the canonical partition forms a scheme") {
  for (const char* spec : {"complete:5", "cycle:5", "cycle:6", "petersen", "prism:4",
                           "platonic:12", "prism:3", "prism:5", "bipartite:2,3",
                           "lineprism3"}) {
    auto g = build_finite(parse_graph_spec(spec));
    bool drg = check_distance_regular(g).distance_regular;
    bool scheme = true;
    try {
      intersection_numbers(g);
    } catch (const not_a_scheme_error&) {
      scheme = false;
    }
    CHECK_MESSAGE(drg == scheme, spec);
  }
}

TEST_CASE("the six scheme identities") {
  for (const char* spec : {"petersen", "platonic:8", "complete:5", "cycle:7"}) {
    auto g = build_finite(parse_graph_spec(spec));
    auto verdict = verify_scheme_identities(intersection_numbers(g));
    CHECK_MESSAGE(verdict.ok, spec, " failed identity (", verdict.failed_identity, ")");
  }
  for (const char* spec : {"tree:3", "linked-triangle"}) {
    auto g = build_lazy(parse_graph_spec(spec));
    auto verdict = verify_scheme_identities(intersection_numbers(g, g.base(), 4));
    CHECK_MESSAGE(verdict.ok, spec, " failed identity (", verdict.failed_identity, ")");
  }
}

TEST_CASE("coefficient transform and Bose-Mesner cross-checks") {
  for (const char* spec : {"petersen", "complete:5", "prism:4", "platonic:6",
                           "platonic:12", "cycle:6"}) {
    auto g = build_finite(parse_graph_spec(spec));
    auto v = drg_coefficient_crosscheck(g, 0);
    CHECK_MESSAGE(v.ok, spec, ": ", v.detail);
  }
  for (const char* spec : {"tree:2", "tree:3", "linked-triangle"}) {
    auto g = build_lazy(parse_graph_spec(spec));
    auto v = drg_coefficient_crosscheck(g, g.base(), 3);
    CHECK_MESSAGE(v.ok, spec, ": ", v.detail);
  }
  // K_5: R_1 o R_1 coefficients are (p_{1,0}^1/p_{1,1}^0, p_{1,1}^1/p_{1,1}^0)
  auto k5 = build_finite(parse_graph_spec("complete:5"));
  auto p = intersection_numbers(k5);
  auto t = convolution_table(k5, 0);
  CHECK(t.row(1, 1).coefficient(0) == Rational(p.at(1, 0, 1), p.valency(1)));
  CHECK(t.row(1, 1).coefficient(0) == Rational(1, 4));
  CHECK(t.row(1, 1).coefficient(1) == Rational(p.at(1, 1, 1), p.valency(1)));
  CHECK(t.row(1, 1).coefficient(1) == Rational(3, 4));

  auto bad = drg_coefficient_crosscheck(build_finite(parse_graph_spec("prism:3")), 0);
  CHECK_FALSE(bad.ok);
}

TEST_CASE("strongly regular parameters") {
  auto pet = srg_parameters(build_finite(parse_graph_spec("petersen")));
  REQUIRE(pet.has_value());
  CHECK(pet->n == 10);
  CHECK(pet->k == 3);
  CHECK(pet->lambda == 0);
  CHECK(pet->mu == 1);

  CHECK_FALSE(srg_parameters(build_finite(parse_graph_spec("complete:6"))).has_value());
  CHECK_FALSE(srg_parameters(build_finite(parse_graph_spec("prism:3"))).has_value());
  // the octahedron is strongly regular
  auto octa = srg_parameters(build_finite(parse_graph_spec("platonic:6")));
  REQUIRE(octa.has_value());
  CHECK(octa->lambda == 2);
  CHECK(octa->mu == 4);
}

TEST_CASE("word distance closed form") {
  CHECK(word_distance("a", "a") == 0);
  CHECK(word_distance("ab", "ac") == 1);
  CHECK(word_distance("a", "b") == 1);
  CHECK(word_distance("ab", "a") == 1);
  CHECK(word_distance("abc", "b") == 3);
  CHECK(word_distance("ab", "abab") == 2);
  CHECK_THROWS_AS(word_distance("", "a"), usage_error);
  CHECK_THROWS_AS(word_distance("aa", "b"), usage_error);
  CHECK_THROWS_AS(word_distance("ad", "b"), usage_error);
}

TEST_CASE("word distance agrees with BFS on a radius-4 ball exhaustively") {
  auto lt = build_lazy(parse_graph_spec("linked-triangle"));
  Ball big(lt, lt.base(), 8);  // radius 2*4 makes all radius-4 pair distances exact
  std::vector<int> core;
  for (int v = 0; v < big.size(); ++v)
    if (big.dist_from_center(v) <= 4) core.push_back(v);
  for (int v : core) {
    auto dv = big.restricted_bfs(v);
    for (int w : core)
      CHECK(word_distance(std::get<std::string>(big.key(v)),
                          std::get<std::string>(big.key(w))) == dv[w]);
  }
}

TEST_CASE("serial and parallel scheme kernels agree") {
  auto g = build_finite(parse_graph_spec("platonic:20"));
  auto a = check_distance_regular(g, Exec::serial);
  auto b = check_distance_regular(g, Exec::parallel);
  CHECK(a.distance_regular == b.distance_regular);
  CHECK(a.array.b == b.array.b);
  CHECK(a.array.c == b.array.c);

  auto pa = intersection_numbers(g, Exec::serial);
  auto pb = intersection_numbers(g, Exec::parallel);
  for (int i = 0; i <= pa.index_bound(); ++i)
    for (int j = 0; j <= pa.index_bound(); ++j)
      for (int k = 0; k <= pa.relation_bound(); ++k)
        CHECK(pa.at(i, j, k) == pb.at(i, j, k));
}
