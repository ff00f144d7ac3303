#include "walkhg/generators.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "walkhg/errors.hpp"

namespace walkhg {

namespace {

const char* kValidSpecs =
    "complete:n, cycle:n, prism:n, bipartite:m,n, platonic:{4,6,8,12,20}, "
    "petersen, lineprism3, linegraph:<spec>, tree:k, linked-triangle, ladder, "
    "lattice, cylinder:n, file:PATH";

std::vector<int> parse_int_params(const std::string& args, const std::string& family) {
  std::vector<int> out;
  if (args.empty()) return out;
  std::stringstream ss(args);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      out.push_back(v);
    } catch (const std::exception&) {
      throw usage_error("bad parameter '" + part + "' for family " + family);
    }
  }
  return out;
}

void require_params(const FamilySpec& s, size_t count) {
  if (s.params.size() != count)
    throw usage_error("family " + s.family + " takes " + std::to_string(count) +
                      " parameter(s)");
}

// Generalized Petersen graph GP(n,k): outer n-cycle, inner star polygon {n/k},
// spokes between them. GP(5,2) is the Petersen graph, GP(10,2) the dodecahedron.
FiniteGraph generalized_petersen(int n, int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(n + i, n + (i + k) % n);
    edges.emplace_back(i, n + i);
  }
  return FiniteGraph(2 * n, edges);
}

FiniteGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return FiniteGraph(n, edges);
}

FiniteGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return FiniteGraph(n, edges);
}

FiniteGraph bipartite_graph(int m, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b) edges.emplace_back(a, m + b);
  return FiniteGraph(m + n, edges);
}

FiniteGraph hypercube3() {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < 8; ++v)
    for (int bit = 0; bit < 3; ++bit)
      if (!(v & (1 << bit))) edges.emplace_back(v, v | (1 << bit));
  return FiniteGraph(8, edges);
}

FiniteGraph octahedron() {
  // Cocktail-party graph: everything except your antipodal partner.
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      if (!(a / 2 == b / 2)) edges.emplace_back(a, b);
  return FiniteGraph(6, edges);
}

FiniteGraph icosahedron() {
  // Pentagonal antiprism (rings 1..5 and 6..10) capped by poles 0 and 11.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(0, 1 + i);
    edges.emplace_back(11, 6 + i);
    edges.emplace_back(1 + i, 1 + (i + 1) % 5);
    edges.emplace_back(6 + i, 6 + (i + 1) % 5);
    edges.emplace_back(1 + i, 6 + i);
    edges.emplace_back(1 + i, 6 + (i + 1) % 5);
  }
  return FiniteGraph(12, edges);
}

FiniteGraph platonic_graph(int n) {
  switch (n) {
    case 4: return complete_graph(4);
    case 6: return octahedron();
    case 8: return hypercube3();
    case 12: return icosahedron();
    case 20: return generalized_petersen(10, 2);
    default:
      throw usage_error("platonic solids have 4, 6, 8, 12 or 20 vertices");
  }
}

std::vector<long long> group_identity(const CayleySpec& s) {
  return std::vector<long long>(s.free_rank + s.torsion.size(), 0);
}

std::vector<long long> reduce_element(const CayleySpec& s, std::vector<long long> e) {
  for (size_t i = 0; i < s.torsion.size(); ++i) {
    long long n = s.torsion[i];
    long long& x = e[s.free_rank + i];
    x %= n;
    if (x < 0) x += n;
  }
  return e;
}

std::vector<long long> invert_element(const CayleySpec& s, std::vector<long long> e) {
  for (auto& x : e) x = -x;
  return reduce_element(s, std::move(e));
}

void validate_cayley(const CayleySpec& s) {
  for (long long n : s.torsion)
    if (n < 2) throw usage_error("torsion factors must be >= 2");
  size_t arity = s.free_rank + s.torsion.size();
  std::set<std::vector<long long>> omega;
  for (const auto& g : s.generators) {
    if (g.size() != arity) throw usage_error("generator arity mismatch");
    omega.insert(reduce_element(s, g));
  }
  if (omega.count(group_identity(s)))
    throw usage_error("generating set must exclude the identity");
  for (const auto& g : omega)
    if (!omega.count(invert_element(s, g)))
      throw usage_error("generating set must be closed under inversion");
}

}  // namespace

FiniteGraph cayley_finite(const CayleySpec& spec) {
  if (spec.free_rank != 0)
    throw usage_error("finite Cayley graph requires free rank 0");
  validate_cayley(spec);

  long long order = 1;
  for (long long n : spec.torsion) order *= n;
  if (order > 1'000'000) throw usage_error("Cayley group too large");

  // Mixed-radix ids, last coordinate fastest.
  auto to_id = [&](const std::vector<long long>& e) {
    long long id = 0;
    for (size_t i = 0; i < spec.torsion.size(); ++i) id = id * spec.torsion[i] + e[i];
    return id;
  };
  auto from_id = [&](long long id) {
    std::vector<long long> e(spec.torsion.size());
    for (size_t i = spec.torsion.size(); i-- > 0;) {
      e[i] = id % spec.torsion[i];
      id /= spec.torsion[i];
    }
    return e;
  };

  std::set<std::pair<int, int>> edges;
  for (long long v = 0; v < order; ++v) {
    auto e = from_id(v);
    for (const auto& g : spec.generators) {
      auto w = e;
      for (size_t i = 0; i < w.size(); ++i) w[i] += g[i];
      long long u = to_id(reduce_element(spec, w));
      if (u != v) edges.insert(std::minmax<int>(static_cast<int>(v), static_cast<int>(u)));
    }
  }
  return FiniteGraph(static_cast<int>(order),
                     std::vector<std::pair<int, int>>(edges.begin(), edges.end()));
}

LazyGraph cayley_lazy(const CayleySpec& spec, const std::string& name) {
  if (spec.free_rank < 1)
    throw usage_error("infinite Cayley graph requires free rank >= 1");
  validate_cayley(spec);

  size_t arity = spec.free_rank + spec.torsion.size();
  std::set<std::vector<long long>> omega;
  for (const auto& g : spec.generators) omega.insert(reduce_element(spec, g));

  auto neighbors = [spec, omega, arity](const VertexKey& key) {
    const auto* coords = std::get_if<std::vector<long long>>(&key);
    if (!coords || coords->size() != arity)
      throw usage_error("vertex key has wrong arity for this Cayley graph");
    std::vector<VertexKey> out;
    for (const auto& g : omega) {
      auto w = *coords;
      for (size_t i = 0; i < w.size(); ++i) w[i] += g[i];
      out.emplace_back(reduce_element(spec, std::move(w)));
    }
    return out;
  };
  return LazyGraph(VertexKey{group_identity(spec)}, neighbors, name);
}

FiniteGraph line_graph(const FiniteGraph& g) {
  auto edges = g.edges();
  if (edges.empty()) throw usage_error("line graph needs at least one edge");
  std::vector<std::pair<int, int>> out;
  for (size_t a = 0; a < edges.size(); ++a)
    for (size_t b = a + 1; b < edges.size(); ++b) {
      auto [p, q] = edges[a];
      auto [r, s] = edges[b];
      if (p == r || p == s || q == r || q == s)
        out.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  return FiniteGraph(static_cast<int>(edges.size()), out);
}

FamilySpec parse_graph_spec(const std::string& text) {
  FamilySpec s;
  auto colon = text.find(':');
  s.family = text.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);

  if (s.family == "lineprism3") {
    s.family = "linegraph";
    s.inner = "prism:3";
    return s;
  }
  if (s.family == "file") {
    if (args.empty()) throw usage_error("file: needs a path");
    s.path = args;
    return s;
  }
  if (s.family == "linegraph") {
    if (args.empty()) throw usage_error("linegraph: needs an inner spec");
    s.inner = args;
    parse_graph_spec(args);  // validate eagerly
    return s;
  }

  static const std::set<std::string> known = {
      "complete", "cycle",  "prism",   "bipartite", "platonic",        "petersen",
      "tree",     "ladder", "lattice", "cylinder",  "linked-triangle"};
  if (!known.count(s.family))
    throw usage_error("unknown graph family '" + s.family + "'; valid specs: " +
                      kValidSpecs);
  s.params = parse_int_params(args, s.family);
  return s;
}

bool FamilySpec::is_finite() const {
  return !(family == "tree" || family == "ladder" || family == "lattice" ||
           family == "cylinder" || family == "linked-triangle");
}

FiniteGraph build_finite(const FamilySpec& spec) {
  if (!spec.is_finite())
    throw usage_error("family " + spec.family + " is infinite");
  if (spec.family == "file") return FiniteGraph::from_file(spec.path);
  if (spec.family == "linegraph") {
    auto inner = parse_graph_spec(spec.inner);
    return line_graph(build_finite(inner));
  }
  if (spec.family == "petersen") {
    require_params(spec, 0);
    return generalized_petersen(5, 2);
  }
  if (spec.family == "complete") {
    require_params(spec, 1);
    if (spec.params[0] < 1) throw usage_error("complete:n needs n >= 1");
    return complete_graph(spec.params[0]);
  }
  if (spec.family == "cycle") {
    require_params(spec, 1);
    if (spec.params[0] < 3) throw usage_error("cycle:n needs n >= 3");
    return cycle_graph(spec.params[0]);
  }
  if (spec.family == "prism") {
    require_params(spec, 1);
    int n = spec.params[0];
    if (n < 3) throw usage_error("prism:n needs n >= 3");
    CayleySpec c;
    c.torsion = {n, 2};
    c.generators = {{1, 0}, {n - 1, 0}, {0, 1}};
    return cayley_finite(c);
  }
  if (spec.family == "bipartite") {
    require_params(spec, 2);
    if (spec.params[0] < 1 || spec.params[1] < 1)
      throw usage_error("bipartite:m,n needs m,n >= 1");
    return bipartite_graph(spec.params[0], spec.params[1]);
  }
  if (spec.family == "platonic") {
    require_params(spec, 1);
    return platonic_graph(spec.params[0]);
  }
  throw usage_error("unhandled finite family " + spec.family);
}

namespace {

void check_word(const std::string& w, char last_letter, bool allow_empty,
                const std::string& family) {
  if (w.empty() && !allow_empty)
    throw usage_error(family + ": the empty word is not a vertex");
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 'a' || w[i] > last_letter)
      throw usage_error(family + ": letter '" + std::string(1, w[i]) +
                        "' outside alphabet");
    if (i > 0 && w[i] == w[i - 1])
      throw usage_error(family + ": repeated consecutive letter in '" + w + "'");
  }
}

LazyGraph tree_graph(int k) {
  char last = static_cast<char>('a' + k - 1);
  auto neighbors = [k, last](const VertexKey& key) {
    const auto* w = std::get_if<std::string>(&key);
    if (!w) throw usage_error("tree vertices are words");
    check_word(*w, last, true, "tree");
    std::vector<VertexKey> out;
    if (!w->empty()) out.emplace_back(w->substr(0, w->size() - 1));
    for (char c = 'a'; c <= last; ++c)
      if (w->empty() || c != w->back()) out.emplace_back(*w + c);
    return out;
  };
  return LazyGraph(VertexKey{std::string{}}, neighbors, "tree:" + std::to_string(k));
}

LazyGraph linked_triangle_graph() {
  auto neighbors = [](const VertexKey& key) {
    const auto* w = std::get_if<std::string>(&key);
    if (!w) throw usage_error("linked-triangle vertices are words");
    check_word(*w, 'c', false, "linked-triangle");
    std::vector<VertexKey> out;
    if (w->size() >= 2) out.emplace_back(w->substr(0, w->size() - 1));
    for (char c = 'a'; c <= 'c'; ++c) {
      if (c != w->back()) out.emplace_back(*w + c);  // extend
      std::string flip = *w;
      flip.back() = c;  // change last letter
      if (c != w->back() && (w->size() < 2 || c != (*w)[w->size() - 2]))
        out.emplace_back(std::move(flip));
    }
    return out;
  };
  return LazyGraph(VertexKey{std::string{"a"}}, neighbors, "linked-triangle");
}

}  // namespace

LazyGraph build_lazy(const FamilySpec& spec) {
  if (spec.is_finite())
    throw usage_error("family " + spec.family + " is finite");
  if (spec.family == "tree") {
    require_params(spec, 1);
    int k = spec.params[0];
    if (k < 2 || k > 26) throw usage_error("tree:k needs 2 <= k <= 26");
    return tree_graph(k);
  }
  if (spec.family == "linked-triangle") {
    require_params(spec, 0);
    return linked_triangle_graph();
  }
  if (spec.family == "ladder") {
    require_params(spec, 0);
    CayleySpec c;
    c.free_rank = 1;
    c.torsion = {2};
    c.generators = {{1, 0}, {-1, 0}, {0, 1}};
    return cayley_lazy(c, "ladder");
  }
  if (spec.family == "lattice") {
    require_params(spec, 0);
    CayleySpec c;
    c.free_rank = 2;
    c.generators = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    return cayley_lazy(c, "lattice");
  }
  if (spec.family == "cylinder") {
    require_params(spec, 1);
    int n = spec.params[0];
    if (n < 2) throw usage_error("cylinder:n needs n >= 2");
    CayleySpec c;
    c.free_rank = 1;
    c.torsion = {n};
    c.generators = {{1, 0}, {-1, 0}, {0, 1}, {0, n - 1}};
    return cayley_lazy(c, "cylinder:" + std::to_string(n));
  }
  throw usage_error("unhandled infinite family " + spec.family);
}

namespace {

// Lexicographically smallest adjacency bitstring over all vertex orderings.
// Bits are grouped per placed vertex t: edges to the already placed 0..t-1,
// earlier position = more significant bit.
struct CanonSearch {
  int n;
  const std::vector<uint32_t>& adj;  // bitmask rows
  std::vector<uint32_t> best;        // per-t packed words
  std::vector<uint32_t> cur;
  std::vector<int> perm;
  uint32_t used = 0;
  bool have_best = false;

  CanonSearch(int n_, const std::vector<uint32_t>& adj_) : n(n_), adj(adj_) {
    best.assign(n, 0);
    cur.assign(n, 0);
    perm.assign(n, 0);
  }

  void run() { place(0, false); }

  // strictly_smaller: cur[0..t-1] is strictly below best's prefix (else equal
  // to it once a best exists). Returns true when best was replaced below;
  // the caller's prefix then matches the new best, so its flag resets.
  bool place(int t, bool strictly_smaller) {
    if (t == n) {
      best = cur;
      have_best = true;
      return true;
    }
    bool replaced = false;
    for (int v = 0; v < n; ++v) {
      if (used & (1u << v)) continue;
      uint32_t word = 0;
      for (int i = 0; i < t; ++i)
        word |= ((adj[perm[i]] >> v) & 1u) << (t - 1 - i);
      bool smaller = strictly_smaller;
      if (!smaller && have_best) {
        if (word > best[t]) continue;  // prune: already worse than best
        if (word < best[t]) smaller = true;
      }
      perm[t] = v;
      cur[t] = word;
      used |= (1u << v);
      if (place(t + 1, smaller)) {
        replaced = true;
        strictly_smaller = false;
      }
      used &= ~(1u << v);
    }
    return replaced;
  }
};

std::vector<uint32_t> adjacency_masks(const FiniteGraph& g) {
  std::vector<uint32_t> m(g.order(), 0);
  for (int v = 0; v < g.order(); ++v)
    for (int w : g.neighbors(v)) m[v] |= (1u << w);
  return m;
}

FiniteGraph graph_from_canonical(int n, const std::vector<uint64_t>& form) {
  std::vector<std::pair<int, int>> edges;
  for (int t = 1; t < n; ++t)
    for (int i = 0; i < t; ++i)
      if ((form[t] >> (t - 1 - i)) & 1) edges.emplace_back(i, t);
  return FiniteGraph(n, edges);
}

}  // namespace

std::vector<uint64_t> canonical_form(const FiniteGraph& g) {
  if (g.order() > 16) throw usage_error("canonical_form supports order <= 16");
  auto masks = adjacency_masks(g);
  CanonSearch search(g.order(), masks);
  search.run();
  return std::vector<uint64_t>(search.best.begin(), search.best.end());
}

bool is_isomorphic(const FiniteGraph& a, const FiniteGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

namespace {

// Enumerate labeled connected k-regular graphs where vertex 0's neighborhood
// is fixed to {1..k}; every k-regular graph has an isomorph of this shape.
struct RegularEnum {
  int n, k;
  std::vector<uint32_t> adj;
  std::vector<int> deg;
  std::vector<std::vector<std::pair<int, int>>> out;

  RegularEnum(int n_, int k_) : n(n_), k(k_), adj(n_, 0), deg(n_, 0) {}

  void add_edge(int a, int b) {
    adj[a] |= (1u << b);
    adj[b] |= (1u << a);
    ++deg[a];
    ++deg[b];
  }
  void remove_edge(int a, int b) {
    adj[a] &= ~(1u << b);
    adj[b] &= ~(1u << a);
    --deg[a];
    --deg[b];
  }

  bool connected() const {
    uint32_t seen = 1, frontier = 1;
    while (frontier) {
      uint32_t next = 0;
      for (int v = 0; v < n; ++v)
        if (frontier & (1u << v)) next |= adj[v];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == (1u << n) - 1;
  }

  void run() {
    for (int i = 1; i <= k; ++i) add_edge(0, i);
    extend(1);
  }

  void extend(int v) {
    if (v == n) {
      if (connected()) record();
      return;
    }
    int need = k - deg[v];
    if (need < 0) return;
    if (need == 0) {
      extend(v + 1);
      return;
    }
    std::vector<int> cand;
    for (int u = v + 1; u < n; ++u)
      if (deg[u] < k) cand.push_back(u);
    if (static_cast<int>(cand.size()) < need) return;
    choose(v, cand, 0, need);
  }

  void choose(int v, const std::vector<int>& cand, size_t from, int need) {
    if (need == 0) {
      extend(v + 1);
      return;
    }
    if (cand.size() - from < static_cast<size_t>(need)) return;
    for (size_t idx = from; idx < cand.size(); ++idx) {
      int u = cand[idx];
      if (deg[u] >= k) continue;
      add_edge(v, u);
      choose(v, cand, idx + 1, need - 1);
      remove_edge(v, u);
    }
  }

  void record() {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (adj[a] & (1u << b)) edges.emplace_back(a, b);
    out.push_back(std::move(edges));
  }
};

}  // namespace

std::vector<FiniteGraph> search_graphs(
    int order, int degree, const std::function<bool(const FiniteGraph&)>& predicate,
    Exec ex) {
  if (order < 1 || order > 10)
    throw usage_error("exhaustive search supports 1 <= order <= 10");
  if (degree < 0 || degree >= order)
    throw usage_error("degree must satisfy 0 <= degree < order");
  if ((static_cast<long long>(order) * degree) % 2 != 0) return {};
  if (degree == 0) {
    if (order != 1) return {};
    FiniteGraph k1(1, {});
    if (predicate && !predicate(k1)) return {};
    return {k1};
  }

  RegularEnum en(order, degree);
  en.run();
  const auto& candidates = en.out;

  std::vector<std::vector<uint64_t>> forms(candidates.size());
#pragma omp parallel for schedule(dynamic) if (parallel_on(ex))
  for (size_t i = 0; i < candidates.size(); ++i)
    forms[i] = canonical_form(FiniteGraph(order, candidates[i]));

  std::set<std::vector<uint64_t>> unique(forms.begin(), forms.end());
  std::vector<std::vector<uint64_t>> sorted(unique.begin(), unique.end());

  std::vector<char> keep(sorted.size(), 1);
#pragma omp parallel for schedule(dynamic) if (parallel_on(ex))
  for (size_t i = 0; i < sorted.size(); ++i)
    if (predicate) keep[i] = predicate(graph_from_canonical(order, sorted[i])) ? 1 : 0;

  std::vector<FiniteGraph> result;
  for (size_t i = 0; i < sorted.size(); ++i)
    if (keep[i]) result.push_back(graph_from_canonical(order, sorted[i]));
  return result;
}

FiniteGraph ball_to_finite_graph(const Ball& b) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < b.size(); ++v)
    for (int w : b.neighbors(v))
      if (v < w) edges.emplace_back(v, w);
  return FiniteGraph(b.size(), edges);
}

}  // namespace walkhg
