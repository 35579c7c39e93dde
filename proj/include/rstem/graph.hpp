#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rstem {

using Vertex = int;

/// Thrown for every violated precondition on graphs, trees and vertex sets.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Undirected edge. Stored edges are always canonical (u < v).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge canonical() const { return u <= v ? Edge{u, v} : Edge{v, u}; }
  constexpr bool touches(Vertex w) const { return u == w || v == w; }
  constexpr Vertex other(Vertex w) const { return u == w ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// Sorted set of distinct vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  explicit VertexSet(std::vector<Vertex> ids);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(Vertex v) const;
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  const std::vector<Vertex>& ids() const { return ids_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> ids_;
};

/// Simple undirected graph on the dense vertex ids 0..n-1.
///
/// Values are immutable once built; add_edge / remove_edge return new graphs.
/// Neighbor lists are kept in ascending order, so every traversal built on
/// top of them is deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Duplicate edges are collapsed; loops and out-of-range ids throw.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  std::size_t edge_count() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool has_edge(Vertex u, Vertex v) const {
    return matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] != 0;
  }
  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  /// All edges in canonical form, ascending.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint8_t> matrix_;
};

void check_vertex(const Graph& g, Vertex v);
void check_vertex_set(const Graph& g, const VertexSet& x);

Graph add_edge(const Graph& g, Vertex u, Vertex v);
Graph remove_edge(const Graph& g, Vertex u, Vertex v);

/// Shortest-path edge count, std::nullopt when v is unreachable from u.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);

/// BFS distances from source; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_new;  // old id -> new id, -1 when dropped
  std::vector<Vertex> to_old;  // new id -> old id
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x);

/// Sum of host degrees over x.
long degree_sum(const Graph& g, const VertexSet& x);

/// Union of neighborhoods N_G(X).
VertexSet neighborhood(const Graph& g, const VertexSet& x);

bool is_connected(const Graph& g);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
/// K_{1,leaves} with the center at vertex 0.
Graph star_graph(int leaves);

}  // namespace rstem
