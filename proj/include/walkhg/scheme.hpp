#ifndef WALKHG_SCHEME_HPP
#define WALKHG_SCHEME_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "walkhg/convolution.hpp"
#include "walkhg/exec.hpp"
#include "walkhg/finite_graph.hpp"
#include "walkhg/lazy_graph.hpp"

namespace walkhg {

// (b_0, ..., b_{s-1}; c_1, ..., c_s). For infinite graphs this is the
// certified prefix up to the requested level; no entry is terminal there.
struct IntersectionArray {
  std::vector<long long> b;
  std::vector<long long> c;
  int s = 0;
  bool truncated = false;
};

struct DrgVerdict {
  bool distance_regular = false;
  IntersectionArray array;          // valid when distance_regular
  int witness_distance = -1;        // smallest (i, pair) counterexample
  std::string witness_kind;         // "degree", "b" or "c"
  std::array<std::string, 2> pair_a{};  // two pairs with differing counts
  std::array<std::string, 2> pair_b{};
  long long count_a = 0, count_b = 0;
};

// Direct counting over all pairs at each distance; for lazy graphs only the
// pairs whose counts are exact inside a radius L+2 ball are quantified.
DrgVerdict check_distance_regular(const FiniteGraph& g, Exec ex = Exec::parallel);
DrgVerdict check_distance_regular(const LazyGraph& g, int prefix, Exec ex = Exec::parallel);

struct not_a_scheme_error : std::runtime_error {
  explicit not_a_scheme_error(const std::string& m) : std::runtime_error(m) {}
};

// Intersection numbers p_{i,j}^k. Finite graphs: full index cube 0..s,
// counts verified constant over every ordered pair. Lazy graphs: i,j up to
// the scope, k up to twice that, counted inside a radius-2L ball against
// pairs (v0, w).
class SchemeTable {
 public:
  SchemeTable() = default;
  SchemeTable(int imax, int kmax, bool truncated)
      : imax_(imax), kmax_(kmax), truncated_(truncated),
        p_((imax + 1) * (imax + 1) * (kmax + 1), 0) {}

  long long at(int i, int j, int k) const { return p_[index(i, j, k)]; }
  long long& at(int i, int j, int k) { return p_[index(i, j, k)]; }
  int index_bound() const { return imax_; }   // max first/second index
  int relation_bound() const { return kmax_; }  // max third index
  bool truncated() const { return truncated_; }
  long long valency(int i) const { return at(i, i, 0); }

 private:
  size_t index(int i, int j, int k) const {
    return (static_cast<size_t>(i) * (imax_ + 1) + j) * (kmax_ + 1) + k;
  }
  int imax_ = 0, kmax_ = 0;
  bool truncated_ = false;
  std::vector<long long> p_;
};

SchemeTable intersection_numbers(const FiniteGraph& g, Exec ex = Exec::parallel);
SchemeTable intersection_numbers(const LazyGraph& g, const VertexKey& v0, int scope,
                                 Exec ex = Exec::parallel);

struct SchemeIdentityVerdict {
  bool ok = true;
  std::string failed_identity;  // "a".."f"
  std::vector<int> indices;
};

// The six classical intersection-number identities, exact, over every index
// combination whose sums are complete within the table's scope.
SchemeIdentityVerdict verify_scheme_identities(const SchemeTable& t);

struct CrosscheckVerdict {
  bool ok = true;
  std::string detail;
};

// Asserts P_{i,j}^k == p_{j,k}^i / p_{j,j}^0 between the independently
// computed convolution and scheme tables; on finite graphs with <= 30
// vertices also materializes the distance matrices and checks both the
// linear-combination product rule and the three-term recurrence
// A^(i) A^(1) = b_{i-1} A^(i-1) + (b_0-b_i-c_i) A^(i) + c_{i+1} A^(i+1).
CrosscheckVerdict drg_coefficient_crosscheck(const FiniteGraph& g, int v0,
                                             Exec ex = Exec::parallel);
CrosscheckVerdict drg_coefficient_crosscheck(const LazyGraph& g, const VertexKey& v0,
                                             int scope, Exec ex = Exec::parallel);

struct SrgParameters {
  long long n = 0, k = 0, lambda = 0, mu = 0;
};

// Parameters iff the graph is distance-regular with diameter exactly two
// (complete graphs are not strongly regular).
std::optional<SrgParameters> srg_parameters(const FiniteGraph& g,
                                            Exec ex = Exec::parallel);

// Closed-form distance between two linked-triangle words: |m-n| when one
// word is a prefix of the other, else m+n-2q-1 where q is the length of the
// longest common prefix.
int word_distance(const std::string& v, const std::string& w);

nlohmann::json scheme_report_json(const DrgVerdict& drg, const SchemeTable* p,
                                  const std::optional<SrgParameters>& srg);

}  // namespace walkhg

#endif
