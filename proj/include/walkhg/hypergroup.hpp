#ifndef WALKHG_HYPERGROUP_HPP
#define WALKHG_HYPERGROUP_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "walkhg/convolution.hpp"
#include "walkhg/exec.hpp"
#include "walkhg/finite_graph.hpp"
#include "walkhg/lazy_graph.hpp"

namespace walkhg {

// One failed axiom with the offending indices and both exact sides.
// Axioms: "self-centered", "unit-mass", "support-criterion",
// "commutativity", "associativity".
struct AxiomFailure {
  std::string axiom;
  std::vector<int> witness;  // vertex, (i,j) pair, or (h,i,j) triple
  ConvolutionRow lhs, rhs;
};

struct CheckVerdict {
  bool ok = true;
  std::vector<AxiomFailure> failures;  // lexicographically smallest witness
  std::string note;
};

// Unit mass, support bound |i-j|..i+j, and the R_0-support criterion
// (P_{i,j}^0 > 0 iff i = j) on every stored row.
CheckVerdict audit_row_axioms(const ConvolutionTable& t);

// row(i,j) == row(j,i) exactly for all pairs in scope.
CheckVerdict check_commutativity(const ConvolutionTable& t, Exec ex = Exec::parallel);

// (R_h . R_i) . R_j == R_h . (R_i . R_j), coefficient by coefficient.
// Finite tables: all triples h,i,j <= diameter. Truncated tables: all
// triples with h+i+j <= triple_bound (default: the table's certified
// pair-sum bound). Throws scope_error when the bound exceeds the table.
CheckVerdict check_associativity_full(const ConvolutionTable& t,
                                      Exec ex = Exec::parallel, int triple_bound = -1);

// Only the h = 1 triples; with commutativity this implies full
// associativity, so the verdict is conditional on that reduction.
CheckVerdict check_associativity_reduced(const ConvolutionTable& t,
                                         Exec ex = Exec::parallel,
                                         int triple_bound = -1);

// Both association orders of a specific triple, for witness reproduction.
std::pair<ConvolutionRow, ConvolutionRow> associativity_sides(const ConvolutionTable& t,
                                                              int h, int i, int j);

struct ProductivityVerdict {
  bool productive = false;
  int scope = 0;        // finite: diameter; truncated: the level bound L
  bool truncated = false;
  std::vector<AxiomFailure> failures;
  nlohmann::json to_json() const;
};

// Pipeline: well-definedness -> table -> row audit -> commutativity ->
// associativity. For infinite graphs the verdict is a certificate up to
// the given level bound, not a proof for all levels.
ProductivityVerdict productivity(const FiniteGraph& g, int v0, Exec ex = Exec::parallel);
ProductivityVerdict productivity(const LazyGraph& g, const VertexKey& v0,
                                 int max_level = 4, Exec ex = Exec::parallel);

// Vertices grouped by exact equality of their convolution tables.
// Classes are ordered by smallest member id.
struct BasePointClassification {
  std::vector<std::vector<int>> classes;
  std::vector<ConvolutionTable> tables;  // one representative per class
  nlohmann::json to_json() const;
};

BasePointClassification classify_base_points(const FiniteGraph& g,
                                             Exec ex = Exec::parallel);

nlohmann::json failure_to_json(const AxiomFailure& f);

}  // namespace walkhg

#endif
