#ifndef WALKHG_LAZY_GRAPH_HPP
#define WALKHG_LAZY_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace walkhg {

// Vertex key of an infinite graph: an integer tuple (Cayley graphs of
// Z^a + torsion) or a letter word (trees, linked-triangle graph).
// Keys are totally ordered and hashable so oracles stay pure and testable.
using VertexKey = std::variant<std::vector<long long>, std::string>;

struct VertexKeyHash {
  size_t operator()(const VertexKey& k) const;
};

std::string key_to_string(const VertexKey& k);        // "1,-2" or "abc"
VertexKey key_from_string(const std::string& text);   // inverse of the above

// An infinite graph presented as a pure neighbor oracle plus a base vertex.
// The oracle must be deterministic, symmetric, loop-free, and return a
// finite nonempty neighbor set for every key (violations are detected
// lazily during ball construction).
class LazyGraph {
 public:
  using NeighborFn = std::function<std::vector<VertexKey>(const VertexKey&)>;

  LazyGraph(VertexKey base, NeighborFn neighbors, std::string name)
      : base_(std::move(base)), neighbors_(std::move(neighbors)), name_(std::move(name)) {}

  const VertexKey& base() const { return base_; }
  const std::string& name() const { return name_; }
  std::vector<VertexKey> neighbors(const VertexKey& v) const { return neighbors_(v); }

 private:
  VertexKey base_;
  NeighborFn neighbors_;
  std::string name_;
};

// Radius-R BFS truncation of an infinite graph. Distances from the center
// are exact ambient distances (BFS layering), and the induced adjacency
// contains every ambient edge with both endpoints in the ball.
class Ball {
 public:
  Ball(const LazyGraph& g, const VertexKey& center, int radius);

  const VertexKey& center_key() const { return verts_[0]; }
  int radius() const { return radius_; }
  int size() const { return static_cast<int>(verts_.size()); }
  const VertexKey& key(int i) const { return verts_[i]; }
  int dist_from_center(int i) const { return dist_[i]; }
  const std::vector<int>& neighbors(int i) const { return adj_[i]; }
  int center_index() const { return 0; }

  // Local index of a key, or -1 if outside the ball.
  int index_of(const VertexKey& k) const;

  long long level_size(int d) const { return level_sizes_[d]; }
  const std::vector<std::vector<int>>& levels() const { return levels_; }

  // BFS inside the ball from local index src, truncated at max_depth
  // (-1 = unbounded). Restricted distances equal ambient distances for
  // every target w with dist_from_center(src) + d(src,w) <= radius.
  std::vector<int> restricted_bfs(int src, int max_depth = -1) const;

 private:
  int radius_;
  std::vector<VertexKey> verts_;           // index 0 is the center
  std::vector<int> dist_;
  std::vector<std::vector<int>> adj_;      // induced adjacency, sorted
  std::vector<std::vector<int>> levels_;   // indices grouped by distance
  std::vector<long long> level_sizes_;
  std::unordered_map<VertexKey, int, VertexKeyHash> index_;
};

// Levels of the partition up to max_level (uses a ball of that radius).
std::vector<std::vector<VertexKey>> distance_partition(const LazyGraph& g,
                                                       const VertexKey& v0,
                                                       int max_level);

// Shortest-path count between two ball vertices. Exact whenever
// dist_from_center(v) + d(v,w) <= radius (geodesic containment).
unsigned long long count_geodesics(const Ball& b, int v, int w);

}  // namespace walkhg

#endif
