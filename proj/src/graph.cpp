#include "rstem/graph.hpp"

#include <algorithm>
#include <queue>

namespace rstem {

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
    throw GraphError("vertex set contains a repeated id");
  if (!ids_.empty() && ids_.front() < 0)
    throw GraphError("vertex set contains a negative id");
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw GraphError("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
  matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& raw : edges) {
    if (raw.u < 0 || raw.u >= n || raw.v < 0 || raw.v >= n)
      throw GraphError("edge " + to_string(raw) + " has an id outside [0," + std::to_string(n) + ")");
    if (raw.u == raw.v) throw GraphError("loop edge " + to_string(raw));
    const auto iu = static_cast<std::size_t>(raw.u), iv = static_cast<std::size_t>(raw.v);
    auto& cell = g.matrix_[iu * static_cast<std::size_t>(n) + iv];
    if (cell) continue;
    cell = 1;
    g.matrix_[iv * static_cast<std::size_t>(n) + iu] = 1;
    g.adj_[iu].push_back(raw.v);
    g.adj_[iv].push_back(raw.u);
    ++g.m_;
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

void check_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v))
    throw GraphError("vertex " + std::to_string(v) + " outside [0," + std::to_string(g.order()) + ")");
}

void check_vertex_set(const Graph& g, const VertexSet& x) {
  for (Vertex v : x) check_vertex(g, v);
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) throw GraphError("cannot add loop " + to_string({u, v}));
  if (g.has_edge(u, v)) throw GraphError("edge " + to_string({u, v}) + " already present");
  auto edges = g.edges();
  edges.push_back(Edge{u, v}.canonical());
  return Graph::from_edges(g.order(), edges);
}

Graph remove_edge(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v || !g.has_edge(u, v)) throw GraphError("edge " + to_string({u, v}) + " not present");
  auto edges = g.edges();
  std::erase(edges, Edge{u, v}.canonical());
  return Graph::from_edges(g.order(), edges);
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  check_vertex(g, source);
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::queue<Vertex> q;
  dist[static_cast<std::size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u)) {
      auto& d = dist[static_cast<std::size_t>(w)];
      if (d < 0) {
        d = dist[static_cast<std::size_t>(u)] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, v);
  const int d = bfs_distances(g, u)[static_cast<std::size_t>(v)];
  if (d < 0) return std::nullopt;
  return d;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x) {
  check_vertex_set(g, x);
  InducedSubgraph out;
  out.to_new.assign(static_cast<std::size_t>(g.order()), -1);
  out.to_old.assign(x.begin(), x.end());
  for (std::size_t i = 0; i < out.to_old.size(); ++i)
    out.to_new[static_cast<std::size_t>(out.to_old[i])] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (Vertex u : x)
    for (Vertex w : g.neighbors(u))
      if (u < w && x.contains(w))
        edges.push_back({out.to_new[static_cast<std::size_t>(u)], out.to_new[static_cast<std::size_t>(w)]});
  out.graph = Graph::from_edges(static_cast<int>(x.size()), edges);
  return out;
}

long degree_sum(const Graph& g, const VertexSet& x) {
  check_vertex_set(g, x);
  long total = 0;
  for (Vertex v : x) total += g.degree(v);
  return total;
}

VertexSet neighborhood(const Graph& g, const VertexSet& x) {
  check_vertex_set(g, x);
  std::vector<char> mark(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : x)
    for (Vertex w : g.neighbors(v)) mark[static_cast<std::size_t>(w)] = 1;
  std::vector<Vertex> ids;
  for (Vertex v = 0; v < g.order(); ++v)
    if (mark[static_cast<std::size_t>(v)]) ids.push_back(v);
  return VertexSet(std::move(ids));
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back(Edge{v, (v + 1) % n}.canonical());
  return Graph::from_edges(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::from_edges(leaves + 1, edges);
}

}  // namespace rstem
