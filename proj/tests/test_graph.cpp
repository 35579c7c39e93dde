#include <gtest/gtest.h>

#include <random>

#include "rstem/graph.hpp"
#include "rstem/oracle.hpp"

using namespace rstem;

namespace {

void expect_well_formed(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbors(v)) {
      ASSERT_TRUE(g.contains(w));
      ASSERT_NE(v, w);
      ASSERT_TRUE(g.has_edge(w, v));
      const auto back = g.neighbors(w);
      ASSERT_NE(std::find(back.begin(), back.end(), v), back.end());
    }
}

}  // namespace

TEST(Graph, TriangleFromEdges) {
  const auto g = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(g.edge_count(), 3u);
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 2);
  EXPECT_EQ(g, complete_graph(3));
}

TEST(Graph, EmptyGraphIsDisconnected) {
  const auto g = Graph::from_edges(4, {});
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_FALSE(is_connected(g));
}

TEST(Graph, RejectsLoopsAndBadIds) {
  EXPECT_THROW(Graph::from_edges(2, {{0, 0}}), GraphError);
  EXPECT_THROW(Graph::from_edges(2, {{0, 2}}), GraphError);
  EXPECT_THROW(Graph::from_edges(2, {{-1, 1}}), GraphError);
}

TEST(Graph, DuplicateEdgesCollapse) {
  const auto g = Graph::from_edges(2, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(Graph, AddRemoveEdge) {
  const auto k3 = complete_graph(3);
  const auto p = remove_edge(k3, 0, 1);
  EXPECT_EQ(p, Graph::from_edges(3, {{0, 2}, {2, 1}}));
  EXPECT_EQ(add_edge(path_graph(3), 0, 2), k3);
  EXPECT_THROW(add_edge(k3, 0, 1), GraphError);
  EXPECT_THROW(add_edge(k3, 1, 1), GraphError);
  EXPECT_THROW(remove_edge(p, 0, 1), GraphError);
}

TEST(Graph, Distance) {
  const auto c6 = cycle_graph(6);
  EXPECT_EQ(distance(c6, 0, 3), 3);
  EXPECT_EQ(distance(c6, 4, 4), 0);
  const auto two = Graph::from_edges(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(distance(two, 0, 3).has_value());
  EXPECT_THROW(distance(c6, 0, 6), GraphError);
}

TEST(Graph, InducedSubgraph) {
  const auto k4 = complete_graph(4);
  const auto sub = induced_subgraph(k4, VertexSet{0, 2, 3});
  EXPECT_EQ(sub.graph, complete_graph(3));
  EXPECT_EQ(sub.to_old, (std::vector<Vertex>{0, 2, 3}));
  EXPECT_EQ(sub.to_new[2], 1);
  EXPECT_EQ(sub.to_new[1], -1);
  EXPECT_EQ(induced_subgraph(k4, VertexSet{}).graph.order(), 0);
  const auto leaves = induced_subgraph(star_graph(3), VertexSet{1, 2, 3});
  EXPECT_EQ(leaves.graph.edge_count(), 0u);
  EXPECT_EQ(leaves.graph.order(), 3);
}

TEST(Graph, DegreeSumConnectivityComplete) {
  EXPECT_EQ(degree_sum(complete_graph(5), VertexSet{1, 3}), 8);
  EXPECT_EQ(degree_sum(complete_graph(5), VertexSet{}), 0);
  EXPECT_FALSE(is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(is_connected(complete_graph(1)));
  EXPECT_EQ(complete_graph(4).edge_count(), 6u);
  EXPECT_THROW(degree_sum(complete_graph(3), VertexSet{3}), GraphError);
}

TEST(Graph, VertexSetIsSortedAndDistinct) {
  const VertexSet s{3, 1, 2};
  EXPECT_EQ(s.ids(), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_THROW((VertexSet{1, 1}), GraphError);
}

TEST(GraphProperty, RandomOperationSequencesKeepInvariants) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    const int n = 2 + static_cast<int>(rng() % 9);
    Graph g(n);
    for (int step = 0; step < 30; ++step) {
      const Vertex u = static_cast<Vertex>(rng() % n), v = static_cast<Vertex>(rng() % n);
      if (u == v) continue;
      const Graph before = g;
      if (g.has_edge(u, v)) {
        g = remove_edge(g, u, v);
        EXPECT_EQ(g.edge_count() + 1, before.edge_count());
        EXPECT_EQ(add_edge(g, u, v), before);
      } else {
        g = add_edge(g, u, v);
        EXPECT_EQ(g.edge_count(), before.edge_count() + 1);
        EXPECT_EQ(remove_edge(g, u, v), before);
      }
      expect_well_formed(g);
    }
  }
}

TEST(GraphProperty, TriangleInequalityOnSampledTriples) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 100; ++round) {
    const auto g = random_connected(3 + static_cast<int>(rng() % 8), 0.4, rng());
    for (int s = 0; s < 20; ++s) {
      const Vertex a = static_cast<Vertex>(rng() % g.order()), b = static_cast<Vertex>(rng() % g.order()),
                   c = static_cast<Vertex>(rng() % g.order());
      EXPECT_LE(*distance(g, a, c), *distance(g, a, b) + *distance(g, b, c));
    }
  }
}
