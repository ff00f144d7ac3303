#ifndef WALKHG_GENERATORS_HPP
#define WALKHG_GENERATORS_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "walkhg/exec.hpp"
#include "walkhg/finite_graph.hpp"
#include "walkhg/lazy_graph.hpp"

namespace walkhg {

// Parsed graph-spec micro-syntax: "complete:5", "prism:6", "bipartite:2,3",
// "platonic:12", "tree:3", "linked-triangle", "ladder", "lattice",
// "cylinder:4", "petersen", "cycle:7", "lineprism3", "linegraph:<spec>",
// "file:PATH".
struct FamilySpec {
  std::string family;
  std::vector<int> params;
  std::string path;    // file: only
  std::string inner;   // linegraph: only, the wrapped spec text

  bool is_finite() const;
};

FamilySpec parse_graph_spec(const std::string& text);

FiniteGraph build_finite(const FamilySpec& spec);
LazyGraph build_lazy(const FamilySpec& spec);

// Finitely generated abelian group Z^free_rank + Z/n_1 + ... + Z/n_r with a
// generating set excluding the identity and closed under inversion.
struct CayleySpec {
  int free_rank = 0;
  std::vector<long long> torsion;
  std::vector<std::vector<long long>> generators;
};

FiniteGraph cayley_finite(const CayleySpec& spec);
LazyGraph cayley_lazy(const CayleySpec& spec, const std::string& name);

// Vertices are the edges of g; two are adjacent iff they share an endpoint.
FiniteGraph line_graph(const FiniteGraph& g);

// Canonical labeling by permutation minimization of the adjacency bitstring.
// Exhaustive over vertex orderings; intended for order <= 10.
std::vector<uint64_t> canonical_form(const FiniteGraph& g);
bool is_isomorphic(const FiniteGraph& a, const FiniteGraph& b);

// All connected degree-regular simple graphs of the given order, up to
// isomorphism, filtered by the predicate (empty predicate keeps all).
// Documented exhaustive-search bound: order <= 10.
std::vector<FiniteGraph> search_graphs(
    int order, int degree,
    const std::function<bool(const FiniteGraph&)>& predicate = {},
    Exec ex = Exec::parallel);

// Ball as a standalone finite graph (induced adjacency); used by tests that
// compare truncations structurally.
FiniteGraph ball_to_finite_graph(const Ball& b);

}  // namespace walkhg

#endif
