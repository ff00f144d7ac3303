#ifndef WALKHG_FINITE_GRAPH_HPP
#define WALKHG_FINITE_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "walkhg/exec.hpp"

namespace walkhg {

// Simple undirected connected graph with dense vertex ids 0..n-1.
// Construction validates: no loops, no multi-edges, symmetric adjacency,
// connected. The single-vertex graph is accepted as the trivial case.
// Immutable after construction; safe to share across threads.
class FiniteGraph {
 public:
  FiniteGraph(int n, const std::vector<std::pair<int, int>>& edges);

  // {"n": <int>, "edges": [[a,b], ...]} with 0-based ids.
  static FiniteGraph from_json_text(const std::string& text);
  // First line "n", then one "a b" edge per line.
  static FiniteGraph from_edge_list_text(const std::string& text);
  // Sniffs the format: JSON if the first non-space byte is '{'.
  static FiniteGraph from_file(const std::string& path);

  int order() const { return n_; }
  int edge_count() const { return edge_count_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }

  // Edges as sorted (a,b) pairs with a < b.
  std::vector<std::pair<int, int>> edges() const;

  bool has_edge(int a, int b) const;

 private:
  int n_;
  int edge_count_;
  std::vector<std::vector<int>> adj_;
};

struct GraphMetrics {
  std::vector<int> eccentricity;
  int radius = 0;
  int diameter = 0;
  bool self_centered = false;
};

// Exact BFS distances from v to every vertex.
std::vector<int> bfs_distances(const FiniteGraph& g, int v);

// All-pairs exact distances, one BFS per source (parallel over sources).
std::vector<std::vector<int>> all_pairs_distances(const FiniteGraph& g,
                                                  Exec ex = Exec::parallel);

GraphMetrics metrics(const FiniteGraph& g, Exec ex = Exec::parallel);

// Levels Gamma_0(v0), ..., Gamma_s(v0) with s = eccentricity of v0.
// Vertices within a level are sorted.
std::vector<std::vector<int>> distance_partition(const FiniteGraph& g, int v0);

// Number of shortest v-w paths, by dynamic programming over BFS layers.
unsigned long long count_geodesics(const FiniteGraph& g, int v, int w);

}  // namespace walkhg

#endif
