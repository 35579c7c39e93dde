#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rstem/graph.hpp"

namespace rstem {

/// A spanning tree of some host graph.
///
/// The tree does not hold on to its host. Construction validates the edge
/// set against the host once; every operation that needs adjacency in the
/// host takes it as an explicit argument.
class SpanningTree {
 public:
  SpanningTree() = default;

  /// Throws GraphError unless `edges` is a spanning tree of `host`.
  static SpanningTree from_edges(const Graph& host, std::span<const Edge> edges);
  static SpanningTree from_edges(const Graph& host, std::initializer_list<Edge> edges) {
    return from_edges(host, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  /// Canonical edges, ascending.
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  friend bool operator==(const SpanningTree& a, const SpanningTree& b) { return a.edges_ == b.edges_ && a.n_ == b.n_; }

 private:
  int n_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

/// The tree viewed as a graph in its own right.
Graph as_graph(const SpanningTree& t);

/// Unique tree path from u to v, both ends included.
std::vector<Vertex> path_between(const SpanningTree& t, Vertex u, Vertex v);

/// B_x: the leaf x followed by the degree-2 vertices up to, but excluding,
/// the nearest branch vertex y_x.
struct LeafBranchPath {
  Vertex leaf = -1;
  Vertex branch = -1;
  std::vector<Vertex> vertices;

  /// The vertex of B_x adjacent to y_x in the tree.
  Vertex attach() const { return vertices.back(); }
  std::size_t size() const { return vertices.size(); }
};

/// Leaves, branch vertices, stem and reducible stem of a tree.
///
/// When the tree has no branch vertex (it is a path) the reducible stem is
/// empty, has no leaves and `paths` is empty. A reducible stem consisting of
/// a single vertex also has no leaves.
struct StemReport {
  VertexSet leaves;
  VertexSet branches;
  VertexSet stem;
  VertexSet rstem;
  VertexSet rstem_leaves;
  std::vector<LeafBranchPath> paths;  // ascending by leaf

  const LeafBranchPath* path_of(Vertex leaf) const;
  /// Leaf-branch paths whose branch vertex is `b`, ascending by leaf.
  std::vector<const LeafBranchPath*> paths_at(Vertex b) const;
  /// Degree of v inside the reducible stem (0 when v is outside it).
  int rstem_degree(const SpanningTree& t, Vertex v) const;
};

StemReport stem_report(const SpanningTree& t);

/// |L(T)| == 2 + sum over branch vertices of (deg_T(b) - 2). Needs n >= 2.
bool leaf_identity_check(const SpanningTree& t);

class TreeRewriteError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// T - remove + add, validated. Throws TreeRewriteError with a diagnosis
/// when the result is not a spanning tree of host.
SpanningTree tree_rewrite(const Graph& host, const SpanningTree& t, std::span<const Edge> remove,
                          std::span<const Edge> add);

/// Same as tree_rewrite but reports failure as std::nullopt.
std::optional<SpanningTree> try_tree_rewrite(const Graph& host, const SpanningTree& t,
                                             std::span<const Edge> remove, std::span<const Edge> add);

/// Depth-first spanning tree; neighbors are visited in ascending id order.
SpanningTree dfs_tree(const Graph& g, Vertex root = 0);

}  // namespace rstem
