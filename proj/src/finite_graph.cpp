#include "walkhg/finite_graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

#include "walkhg/errors.hpp"

namespace walkhg {

FiniteGraph::FiniteGraph(int n, const std::vector<std::pair<int, int>>& edges)
    : n_(n), edge_count_(static_cast<int>(edges.size())), adj_(std::max(n, 0)) {
  if (n <= 0) throw invalid_graph_error("graph must have at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw invalid_graph_error("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                ") out of range for n=" + std::to_string(n));
    if (a == b)
      throw invalid_graph_error("loop at vertex " + std::to_string(a));
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second)
      throw invalid_graph_error("duplicate edge (" + std::to_string(key.first) + "," +
                                std::to_string(key.second) + ")");
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());

  auto d = bfs_distances(*this, 0);
  for (int v = 0; v < n_; ++v)
    if (d[v] < 0)
      throw invalid_graph_error("graph is disconnected: vertex " + std::to_string(v) +
                                " unreachable from 0");
}

FiniteGraph FiniteGraph::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw invalid_graph_error(std::string("bad graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw invalid_graph_error("graph JSON must be {\"n\": int, \"edges\": [[a,b],...]}");
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw invalid_graph_error("each edge must be a pair [a,b]");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return FiniteGraph(n, edges);
}

FiniteGraph FiniteGraph::from_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  int n;
  if (!(in >> n)) throw invalid_graph_error("edge-list text must start with n");
  std::vector<std::pair<int, int>> edges;
  int a, b;
  while (in >> a >> b) edges.emplace_back(a, b);
  if (!in.eof()) throw invalid_graph_error("trailing garbage in edge-list text");
  return FiniteGraph(n, edges);
}

FiniteGraph FiniteGraph::from_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw usage_error("cannot open graph file: " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  std::string text = buf.str();
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') return from_json_text(text);
  return from_edge_list_text(text);
}

std::vector<std::pair<int, int>> FiniteGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < n_; ++v)
    for (int w : adj_[v])
      if (v < w) out.emplace_back(v, w);
  return out;
}

bool FiniteGraph::has_edge(int a, int b) const {
  const auto& list = adj_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

std::vector<int> bfs_distances(const FiniteGraph& g, int v) {
  std::vector<int> dist(g.order(), -1);
  dist[v] = 0;
  std::queue<int> q;
  q.push(v);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const FiniteGraph& g, Exec ex) {
  int n = g.order();
  std::vector<std::vector<int>> d(n);
#pragma omp parallel for schedule(dynamic) if (parallel_on(ex))
  for (int v = 0; v < n; ++v) d[v] = bfs_distances(g, v);
  return d;
}

GraphMetrics metrics(const FiniteGraph& g, Exec ex) {
  int n = g.order();
  GraphMetrics m;
  m.eccentricity.assign(n, 0);
#pragma omp parallel for schedule(dynamic) if (parallel_on(ex))
  for (int v = 0; v < n; ++v) {
    auto d = bfs_distances(g, v);
    m.eccentricity[v] = *std::max_element(d.begin(), d.end());
  }
  m.radius = *std::min_element(m.eccentricity.begin(), m.eccentricity.end());
  m.diameter = *std::max_element(m.eccentricity.begin(), m.eccentricity.end());
  m.self_centered = (m.radius == m.diameter);
  return m;
}

std::vector<std::vector<int>> distance_partition(const FiniteGraph& g, int v0) {
  auto d = bfs_distances(g, v0);
  int ecc = *std::max_element(d.begin(), d.end());
  std::vector<std::vector<int>> levels(ecc + 1);
  for (int v = 0; v < g.order(); ++v) levels[d[v]].push_back(v);
  return levels;  // vertices appear in increasing id order
}

unsigned long long count_geodesics(const FiniteGraph& g, int v, int w) {
  auto d = bfs_distances(g, v);
  std::vector<int> order(g.order());
  for (int u = 0; u < g.order(); ++u) order[u] = u;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
  std::vector<unsigned long long> ways(g.order(), 0);
  ways[v] = 1;
  for (int u : order) {
    if (u == v) continue;
    for (int p : g.neighbors(u))
      if (d[p] == d[u] - 1) ways[u] += ways[p];
  }
  return ways[w];
}

}  // namespace walkhg
