#include "rstem/spanning_tree.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <variant>

namespace rstem {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

// Diagnosis when `edges` (canonical, sorted, distinct) is not a spanning tree of host.
std::optional<std::string> tree_defect(const Graph& host, std::span<const Edge> edges) {
  const int n = host.order();
  for (const Edge& e : edges) {
    if (!host.contains(e.u) || !host.contains(e.v)) return "edge " + to_string(e) + " has an id out of range";
    if (!host.has_edge(e.u, e.v)) return "edge " + to_string(e) + " is not an edge of the host graph";
  }
  if (n > 0 && edges.size() != static_cast<std::size_t>(n - 1))
    return "tree needs " + std::to_string(n - 1) + " edges, got " + std::to_string(edges.size());
  DisjointSets dsu(n);
  for (const Edge& e : edges)
    if (!dsu.unite(e.u, e.v)) return "edge " + to_string(e) + " closes a cycle";
  return std::nullopt;
}

}  // namespace

SpanningTree SpanningTree::from_edges(const Graph& host, std::span<const Edge> edges) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) throw GraphError("loop edge " + to_string(e) + " in tree");
    canon.push_back(e.canonical());
  }
  std::sort(canon.begin(), canon.end());
  if (std::adjacent_find(canon.begin(), canon.end()) != canon.end())
    throw GraphError("tree edge list has a repeated edge");
  if (auto why = tree_defect(host, canon)) throw GraphError("not a spanning tree: " + *why);

  SpanningTree t;
  t.n_ = host.order();
  t.adj_.resize(static_cast<std::size_t>(t.n_));
  for (const Edge& e : canon) {
    t.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    t.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& nb : t.adj_) std::sort(nb.begin(), nb.end());
  t.edges_ = std::move(canon);
  return t;
}

bool SpanningTree::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_) return false;
  const auto& nb = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph as_graph(const SpanningTree& t) { return Graph::from_edges(t.order(), t.edges()); }

std::vector<Vertex> path_between(const SpanningTree& t, Vertex u, Vertex v) {
  const int n = t.order();
  if (u < 0 || u >= n || v < 0 || v >= n) throw GraphError("path endpoint out of range");
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack{v};
  parent[static_cast<std::size_t>(v)] = v;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    if (x == u) break;
    for (Vertex w : t.neighbors(x))
      if (parent[static_cast<std::size_t>(w)] < 0) {
        parent[static_cast<std::size_t>(w)] = x;
        stack.push_back(w);
      }
  }
  std::vector<Vertex> path{u};
  for (Vertex x = u; x != v;) {
    x = parent[static_cast<std::size_t>(x)];
    path.push_back(x);
  }
  return path;
}

const LeafBranchPath* StemReport::path_of(Vertex leaf) const {
  auto it = std::lower_bound(paths.begin(), paths.end(), leaf,
                             [](const LeafBranchPath& p, Vertex x) { return p.leaf < x; });
  if (it == paths.end() || it->leaf != leaf) return nullptr;
  return &*it;
}

std::vector<const LeafBranchPath*> StemReport::paths_at(Vertex b) const {
  std::vector<const LeafBranchPath*> out;
  for (const auto& p : paths)
    if (p.branch == b) out.push_back(&p);
  return out;
}

int StemReport::rstem_degree(const SpanningTree& t, Vertex v) const {
  if (!rstem.contains(v)) return 0;
  int d = 0;
  for (Vertex w : t.neighbors(v))
    if (rstem.contains(w)) ++d;
  return d;
}

StemReport stem_report(const SpanningTree& t) {
  const int n = t.order();
  StemReport r;
  std::vector<Vertex> leaves, branches, stem;
  for (Vertex v = 0; v < n; ++v) {
    const int d = t.degree(v);
    if (d == 1) leaves.push_back(v);
    else stem.push_back(v);
    if (d >= 3) branches.push_back(v);
  }
  r.leaves = VertexSet(leaves);
  r.branches = VertexSet(branches);
  r.stem = VertexSet(std::move(stem));
  if (branches.empty()) return r;

  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (Vertex x : leaves) {
    LeafBranchPath p;
    p.leaf = x;
    Vertex prev = -1, cur = x;
    while (t.degree(cur) < 3) {
      p.vertices.push_back(cur);
      removed[static_cast<std::size_t>(cur)] = 1;
      const auto nb = t.neighbors(cur);
      const Vertex next = nb[0] != prev ? nb[0] : nb[1];
      prev = cur;
      cur = next;
    }
    p.branch = cur;
    r.paths.push_back(std::move(p));
  }

  std::vector<Vertex> rstem, rleaves;
  for (Vertex v = 0; v < n; ++v)
    if (!removed[static_cast<std::size_t>(v)]) rstem.push_back(v);
  r.rstem = VertexSet(std::move(rstem));
  for (Vertex v : r.rstem)
    if (r.rstem_degree(t, v) == 1) rleaves.push_back(v);
  r.rstem_leaves = VertexSet(std::move(rleaves));
  return r;
}

bool leaf_identity_check(const SpanningTree& t) {
  if (t.order() < 2) throw GraphError("leaf identity needs at least 2 vertices");
  const auto r = stem_report(t);
  long rhs = 2;
  for (Vertex b : r.branches) rhs += t.degree(b) - 2;
  return static_cast<long>(r.leaves.size()) == rhs;
}

namespace {

std::variant<std::vector<Edge>, std::string> rewritten_edges(const Graph& host, const SpanningTree& t,
                                                             std::span<const Edge> remove,
                                                             std::span<const Edge> add) {
  if (remove.size() != add.size()) return std::string("rewrite must add as many edges as it removes");
  std::vector<Edge> edges(t.edges().begin(), t.edges().end());
  for (const Edge& raw : remove) {
    const Edge e = raw.canonical();
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) return "removed edge " + to_string(e) + " is not a tree edge";
    edges.erase(it);
  }
  for (const Edge& raw : add) {
    const Edge e = raw.canonical();
    if (e.u == e.v || !host.contains(e.u) || !host.contains(e.v) || !host.has_edge(e.u, e.v))
      return "added edge " + to_string(e) + " is not an edge of the host graph";
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it != edges.end() && *it == e) return "added edge " + to_string(e) + " is already in the tree";
    edges.insert(it, e);
  }
  return edges;
}

}  // namespace

SpanningTree tree_rewrite(const Graph& host, const SpanningTree& t, std::span<const Edge> remove,
                          std::span<const Edge> add) {
  auto edges = rewritten_edges(host, t, remove, add);
  if (auto* why = std::get_if<std::string>(&edges)) throw TreeRewriteError(*why);
  const auto& list = std::get<std::vector<Edge>>(edges);
  if (auto why = tree_defect(host, list)) throw TreeRewriteError("rewrite is not a spanning tree: " + *why);
  return SpanningTree::from_edges(host, list);
}

std::optional<SpanningTree> try_tree_rewrite(const Graph& host, const SpanningTree& t,
                                             std::span<const Edge> remove, std::span<const Edge> add) {
  auto edges = rewritten_edges(host, t, remove, add);
  if (std::holds_alternative<std::string>(edges)) return std::nullopt;
  const auto& list = std::get<std::vector<Edge>>(edges);
  if (tree_defect(host, list)) return std::nullopt;
  return SpanningTree::from_edges(host, list);
}

SpanningTree dfs_tree(const Graph& g, Vertex root) {
  check_vertex(g, root);
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Edge> edges;
  // Explicit stack of (vertex, next neighbor index) keeps the recursive visiting order.
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  seen[static_cast<std::size_t>(root)] = 1;
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    const auto nb = g.neighbors(v);
    if (i == nb.size()) {
      stack.pop_back();
      continue;
    }
    const Vertex w = nb[i++];
    if (!seen[static_cast<std::size_t>(w)]) {
      seen[static_cast<std::size_t>(w)] = 1;
      edges.push_back(Edge{v, w}.canonical());
      stack.emplace_back(w, 0);
    }
  }
  if (edges.size() + 1 != static_cast<std::size_t>(g.order())) throw GraphError("graph is not connected");
  return SpanningTree::from_edges(g, edges);
}

}  // namespace rstem
