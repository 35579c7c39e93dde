#include <gtest/gtest.h>

#include <random>

#include "rstem/exchange.hpp"
#include "rstem/oracle.hpp"
#include "rstem/spanning_tree.hpp"

using namespace rstem;

namespace {

SpanningTree self_tree(int n, std::initializer_list<Edge> edges) {
  const auto g = Graph::from_edges(n, edges);
  return SpanningTree::from_edges(g, g.edges());
}

// Center 0 with legs 0-1-2, 0-3-4, 0-5-6.
SpanningTree spider() { return self_tree(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}); }

// Branch vertices 0 and 2 joined through 1; leaves 3,4 on 0 and 5,6 on 2.
SpanningTree double_spider() { return self_tree(7, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {2, 5}, {2, 6}}); }

}  // namespace

TEST(SpanningTree, RejectsNonTrees) {
  const auto k4 = complete_graph(4);
  EXPECT_THROW(SpanningTree::from_edges(k4, std::vector<Edge>{{0, 1}, {1, 2}}), GraphError);
  EXPECT_THROW(SpanningTree::from_edges(k4, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}}), GraphError);
  EXPECT_THROW(SpanningTree::from_edges(path_graph(4), std::vector<Edge>{{0, 1}, {1, 2}, {0, 3}}), GraphError);
  EXPECT_THROW(SpanningTree::from_edges(k4, std::vector<Edge>{{0, 1}, {1, 0}, {2, 3}}), GraphError);
}

TEST(SpanningTree, PathBetween) {
  const auto p5 = self_tree(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  EXPECT_EQ(path_between(p5, 0, 4), (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_EQ(path_between(p5, 3, 3), (std::vector<Vertex>{3}));
  const auto star = SpanningTree::from_edges(star_graph(3), star_graph(3).edges());
  EXPECT_EQ(path_between(star, 1, 2), (std::vector<Vertex>{1, 0, 2}));
}

TEST(StemReport, Spider) {
  const auto r = stem_report(spider());
  EXPECT_EQ(r.leaves, (VertexSet{2, 4, 6}));
  EXPECT_EQ(r.branches, (VertexSet{0}));
  ASSERT_EQ(r.paths.size(), 3u);
  for (const auto& p : r.paths) {
    EXPECT_EQ(p.size(), 2u);
    EXPECT_EQ(p.branch, 0);
  }
  EXPECT_EQ(r.path_of(2)->vertices, (std::vector<Vertex>{2, 1}));
  EXPECT_EQ(r.rstem, (VertexSet{0}));
  EXPECT_TRUE(r.rstem_leaves.empty());
}

TEST(StemReport, DoubleSpider) {
  const auto t = double_spider();
  const auto r = stem_report(t);
  EXPECT_EQ(r.rstem, (VertexSet{0, 1, 2}));
  EXPECT_EQ(r.rstem_leaves, (VertexSet{0, 2}));
  EXPECT_EQ(r.stem, (VertexSet{0, 1, 2}));
  EXPECT_EQ(r.paths_at(2).size(), 2u);
  EXPECT_EQ(r.rstem_degree(t, 1), 2);
}

TEST(StemReport, PathHasEmptyReducibleStem) {
  const auto r = stem_report(self_tree(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
  EXPECT_TRUE(r.branches.empty());
  EXPECT_TRUE(r.rstem.empty());
  EXPECT_TRUE(r.rstem_leaves.empty());
  EXPECT_TRUE(r.paths.empty());
  EXPECT_EQ(r.leaves, (VertexSet{0, 4}));
}

TEST(StemReport, LeafIdentityExamples) {
  EXPECT_TRUE(leaf_identity_check(self_tree(4, {{0, 1}, {1, 2}, {2, 3}})));
  EXPECT_TRUE(leaf_identity_check(SpanningTree::from_edges(star_graph(3), star_graph(3).edges())));
  EXPECT_TRUE(leaf_identity_check(double_spider()));
  EXPECT_THROW(leaf_identity_check(self_tree(1, {})), GraphError);
}

TEST(TreeRewrite, Examples) {
  const auto k3 = complete_graph(3);
  const auto t = SpanningTree::from_edges(k3, std::vector<Edge>{{0, 1}, {1, 2}});
  const auto swapped = tree_rewrite(k3, t, std::vector<Edge>{{0, 1}}, std::vector<Edge>{{0, 2}});
  EXPECT_EQ(path_between(swapped, 1, 0), (std::vector<Vertex>{1, 2, 0}));
  EXPECT_EQ(tree_rewrite(k3, t, {}, {}), t);
  EXPECT_EQ(tree_rewrite(k3, t, std::vector<Edge>{{0, 1}}, std::vector<Edge>{{1, 0}}), t);
}

TEST(TreeRewrite, Diagnoses) {
  const auto k4 = complete_graph(4);
  const auto t = SpanningTree::from_edges(k4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  EXPECT_THROW(tree_rewrite(k4, t, std::vector<Edge>{{0, 2}}, std::vector<Edge>{{0, 3}}), TreeRewriteError);
  EXPECT_THROW(tree_rewrite(k4, t, std::vector<Edge>{{0, 1}}, std::vector<Edge>{{1, 3}}), TreeRewriteError);
  EXPECT_THROW(tree_rewrite(k4, t, std::vector<Edge>{{0, 1}}, std::vector<Edge>{}), TreeRewriteError);
  EXPECT_THROW(tree_rewrite(k4, t, std::vector<Edge>{{0, 1}}, std::vector<Edge>{{1, 2}}), TreeRewriteError);
  EXPECT_FALSE(try_tree_rewrite(k4, t, std::vector<Edge>{{0, 1}}, std::vector<Edge>{{1, 3}}).has_value());
  EXPECT_THROW(tree_rewrite(path_graph(4), t, std::vector<Edge>{{0, 1}}, std::vector<Edge>{{0, 2}}),
               TreeRewriteError);
}

TEST(DfsTree, AscendingOrderAndDisconnected) {
  const auto t = dfs_tree(complete_graph(4));
  EXPECT_EQ(std::vector<Edge>(t.edges().begin(), t.edges().end()), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_THROW(dfs_tree(Graph::from_edges(3, {{0, 1}})), GraphError);
}

TEST(TreeProperty, RandomTreesSatisfyStructuralInvariants) {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 500; ++round) {
    const int n = 2 + static_cast<int>(rng() % 14);
    const auto g = random_connected(n, 0.2 + 0.6 * unit_interval(rng()), rng());
    const auto t = initial_tree(g, rng());
    ASSERT_EQ(t.edges().size(), static_cast<std::size_t>(n - 1));
    ASSERT_TRUE(leaf_identity_check(t));
    const auto r = stem_report(t);
    for (Vertex v = 0; v < n; ++v) {
      EXPECT_EQ(r.leaves.contains(v), t.degree(v) == 1);
      EXPECT_EQ(r.branches.contains(v), t.degree(v) >= 3);
    }
    if (r.branches.empty()) continue;
    std::vector<int> cover(static_cast<std::size_t>(n), 0);
    std::size_t total = r.rstem.size();
    for (const auto& p : r.paths) {
      total += p.size();
      for (Vertex v : p.vertices) ++cover[static_cast<std::size_t>(v)];
      EXPECT_TRUE(r.branches.contains(p.branch));
    }
    EXPECT_EQ(total, static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) EXPECT_EQ(cover[static_cast<std::size_t>(v)] + (r.rstem.contains(v) ? 1 : 0), 1);
    if (r.rstem.size() >= 2)
      for (Vertex x : r.rstem_leaves) EXPECT_GE(t.degree(x), 3);
  }
}

TEST(TreeProperty, ValidSwapsPreserveVertexAndEdgeCount) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 100; ++round) {
    const auto g = random_connected(4 + static_cast<int>(rng() % 8), 0.5, rng());
    const auto t = dfs_tree(g);
    for (const auto& mv : single_swap_candidates(g, t)) {
      const auto next = tree_rewrite(g, t, mv.remove, mv.add);
      EXPECT_EQ(next.order(), g.order());
      EXPECT_EQ(next.edges().size(), t.edges().size());
    }
  }
}
