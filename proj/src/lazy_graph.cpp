#include "walkhg/lazy_graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "walkhg/errors.hpp"

namespace walkhg {

size_t VertexKeyHash::operator()(const VertexKey& k) const {
  if (const auto* w = std::get_if<std::string>(&k)) {
    return std::hash<std::string>{}(*w) * 2 + 1;
  }
  const auto& c = std::get<std::vector<long long>>(k);
  size_t h = 0x9e3779b97f4a7c15ULL;
  for (long long x : c) h = (h ^ std::hash<long long>{}(x)) * 0x100000001b3ULL;
  return h * 2;
}

std::string key_to_string(const VertexKey& k) {
  if (const auto* w = std::get_if<std::string>(&k)) return *w;
  const auto& c = std::get<std::vector<long long>>(k);
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s;
}

VertexKey key_from_string(const std::string& text) {
  bool numeric = !text.empty();
  for (char ch : text)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == ','))
      numeric = false;
  if (!numeric) return VertexKey{text};
  std::vector<long long> coords;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
    try {
      coords.push_back(std::stoll(part));
    } catch (const std::exception&) {
      throw usage_error("bad vertex key: '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return VertexKey{coords};
}

Ball::Ball(const LazyGraph& g, const VertexKey& center, int radius) : radius_(radius) {
  if (radius < 0) throw usage_error("ball radius must be nonnegative");

  verts_.push_back(center);
  dist_.push_back(0);
  index_[center] = 0;
  levels_.push_back({0});

  // Level-by-level BFS; each new level is sorted by key.
  std::vector<int> frontier = {0};
  for (int level = 1; level <= radius && !frontier.empty(); ++level) {
    std::vector<VertexKey> next;
    for (int u : frontier)
      for (const auto& w : g.neighbors(verts_[u]))
        if (!index_.count(w)) {
          index_[w] = -1;  // mark seen, index assigned after sorting
          next.push_back(w);
        }
    std::sort(next.begin(), next.end());
    frontier.clear();
    for (auto& w : next) {
      int id = static_cast<int>(verts_.size());
      index_[w] = id;
      verts_.push_back(std::move(w));
      dist_.push_back(level);
      frontier.push_back(id);
    }
    if (!frontier.empty()) levels_.push_back(frontier);
  }

  // Query every ball vertex (boundary included) so that the induced
  // adjacency carries all edges with both endpoints inside, then check the
  // oracle contract on what is visible.
  adj_.resize(verts_.size());
  for (size_t v = 0; v < verts_.size(); ++v) {
    auto list = g.neighbors(verts_[v]);
    if (list.empty())
      throw malformed_oracle_error("vertex " + key_to_string(verts_[v]) +
                                   " has no neighbors");
    std::sort(list.begin(), list.end());
    for (size_t i = 0; i + 1 < list.size(); ++i)
      if (list[i] == list[i + 1])
        throw malformed_oracle_error("duplicate neighbor of " + key_to_string(verts_[v]));
    for (const auto& w : list) {
      if (w == verts_[v])
        throw malformed_oracle_error("loop at " + key_to_string(verts_[v]));
      auto it = index_.find(w);
      if (it != index_.end()) adj_[v].push_back(it->second);
    }
    std::sort(adj_[v].begin(), adj_[v].end());
  }
  for (size_t v = 0; v < verts_.size(); ++v)
    for (int w : adj_[v])
      if (!std::binary_search(adj_[w].begin(), adj_[w].end(), static_cast<int>(v)))
        throw malformed_oracle_error("asymmetric neighbor relation between " +
                                     key_to_string(verts_[v]) + " and " +
                                     key_to_string(verts_[w]));

  level_sizes_.assign(radius + 1, 0);
  for (int d : dist_) ++level_sizes_[d];
}

int Ball::index_of(const VertexKey& k) const {
  auto it = index_.find(k);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> Ball::restricted_bfs(int src, int max_depth) const {
  std::vector<int> d(verts_.size(), -1);
  d[src] = 0;
  std::queue<int> q;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (max_depth >= 0 && d[u] >= max_depth) continue;
    for (int w : adj_[u])
      if (d[w] < 0) {
        d[w] = d[u] + 1;
        q.push(w);
      }
  }
  return d;
}

std::vector<std::vector<VertexKey>> distance_partition(const LazyGraph& g,
                                                       const VertexKey& v0,
                                                       int max_level) {
  if (max_level < 0) throw usage_error("lazy distance_partition needs max_level >= 0");
  Ball b(g, v0, max_level);
  std::vector<std::vector<VertexKey>> out;
  for (const auto& level : b.levels()) {
    std::vector<VertexKey> keys;
    keys.reserve(level.size());
    for (int i : level) keys.push_back(b.key(i));
    out.push_back(std::move(keys));
  }
  return out;
}

unsigned long long count_geodesics(const Ball& b, int v, int w) {
  auto d = b.restricted_bfs(v);
  if (d[w] < 0) throw scope_error("count_geodesics: target outside the component");
  std::vector<int> order;
  for (int u = 0; u < b.size(); ++u)
    if (d[u] >= 0) order.push_back(u);
  std::sort(order.begin(), order.end(), [&](int a, int c) { return d[a] < d[c]; });
  std::vector<unsigned long long> ways(b.size(), 0);
  ways[v] = 1;
  for (int u : order) {
    if (u == v) continue;
    for (int p : b.neighbors(u))
      if (d[p] == d[u] - 1) ways[u] += ways[p];
  }
  return ways[w];
}

}  // namespace walkhg
