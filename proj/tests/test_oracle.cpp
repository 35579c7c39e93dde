#include <gtest/gtest.h>

#include <random>
#include <set>

#include "rstem/exchange.hpp"
#include "rstem/oracle.hpp"

using namespace rstem;

TEST(Enumeration, TreeCounts) {
  EXPECT_EQ(count_spanning_trees(complete_graph(3)).count, 3u);
  EXPECT_EQ(count_spanning_trees(complete_graph(4)).count, 16u);
  EXPECT_EQ(count_spanning_trees(cycle_graph(5)).count, 5u);
  EXPECT_EQ(count_spanning_trees(path_graph(6)).count, 1u);
  EXPECT_EQ(count_spanning_trees(complete_graph(1)).count, 1u);
  EXPECT_THROW(count_spanning_trees(Graph::from_edges(3, {{0, 1}})), GraphError);
}

TEST(Enumeration, MatrixTreeCounts) {
  EXPECT_EQ(matrix_tree_count(complete_graph(4)), "16");
  EXPECT_EQ(matrix_tree_count(complete_graph(10)), "100000000");
  EXPECT_EQ(matrix_tree_count(Graph::from_edges(3, {{0, 1}})), "0");
  const auto petersen = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                               {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  EXPECT_EQ(matrix_tree_count(petersen), "2000");
  EXPECT_EQ(count_spanning_trees(petersen).count, 2000u);
}

TEST(Enumeration, CapAndStop) {
  const auto k5 = complete_graph(5);
  const auto capped = count_spanning_trees(k5, 10);
  EXPECT_TRUE(capped.capped);
  EXPECT_EQ(capped.count, 10u);
  const auto exact = count_spanning_trees(k5, 125);
  EXPECT_FALSE(exact.capped);
  EXPECT_EQ(exact.count, 125u);
  int seen = 0;
  const auto stopped = enumerate_spanning_trees(k5, [&](std::span<const Edge>) { return ++seen < 3; });
  EXPECT_TRUE(stopped.stopped);
  EXPECT_EQ(seen, 3);
}

TEST(Enumeration, TreesAreDistinctSpanningTrees) {
  const auto g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}, {0, 4}});
  std::set<std::vector<Edge>> seen;
  enumerate_spanning_trees(g, [&](std::span<const Edge> edges) {
    const std::vector<Edge> e(edges.begin(), edges.end());
    EXPECT_NO_THROW(SpanningTree::from_edges(g, e));
    EXPECT_TRUE(seen.insert(e).second);
    return true;
  });
  EXPECT_EQ(std::to_string(seen.size()), matrix_tree_count(g));
}

TEST(Oracle, MinimumExamples) {
  EXPECT_EQ(min_leaf_tree(cycle_graph(6)).minimum, 2);
  const auto star = min_leaf_tree(star_graph(3));
  EXPECT_EQ(star.minimum, 3);
  ASSERT_TRUE(star.witness.has_value());
  EXPECT_EQ(min_rstem_leaf_tree(star_graph(3)).minimum, 0);
  EXPECT_EQ(min_tree(star_graph(3), TreeObjective::StemBranches).minimum, 0);
  EXPECT_EQ(min_tree(star_graph(3), TreeObjective::StemLeaves).minimum, 0);
  const auto s = gen_sharpness(2, 1);
  EXPECT_GE(min_rstem_leaf_tree(s.graph).minimum, 3);
  EXPECT_EQ(to_string(TreeObjective::RStemBranches), "rstem-branches");
}

TEST(Oracle, CappedResultIsFlagged) {
  const auto r = min_tree(complete_graph(6), TreeObjective::StemBranches, 1);
  EXPECT_LE(r.trees_examined, 1u);
}

TEST(OracleProperty, FastObjectiveMatchesStemReport) {
  std::mt19937_64 rng(31);
  const TreeObjective all[] = {TreeObjective::Leaves, TreeObjective::StemLeaves, TreeObjective::StemBranches,
                               TreeObjective::RStemLeaves, TreeObjective::RStemBranches};
  for (int round = 0; round < 40; ++round) {
    const auto g = random_connected(3 + static_cast<int>(rng() % 5), 0.5, rng());
    for (TreeObjective o : all) {
      int slow = 1 << 30;
      enumerate_spanning_trees(g, [&](std::span<const Edge> edges) {
        slow = std::min(slow, tree_objective(o, SpanningTree::from_edges(g, std::vector<Edge>(edges.begin(), edges.end()))));
        return true;
      });
      const auto fast = min_tree(g, o);
      EXPECT_EQ(fast.minimum, slow) << to_string(o);
      ASSERT_TRUE(fast.witness.has_value());
      EXPECT_EQ(tree_objective(o, *fast.witness), fast.minimum);
    }
  }
}

TEST(OracleProperty, EnumerationAgreesWithMatrixTree) {
  std::mt19937_64 rng(2);
  for (int round = 0; round < 60; ++round) {
    const auto g = random_connected(2 + static_cast<int>(rng() % 7), 0.3 + 0.7 * unit_interval(rng()), rng());
    EXPECT_EQ(std::to_string(count_spanning_trees(g).count), matrix_tree_count(g));
  }
}

TEST(Conformance, Examples) {
  const auto r = check_theorem(cycle_graph(6), "1.3", {.l = 2});
  EXPECT_EQ(r.verdict, Verdict::Conforms);
  EXPECT_TRUE(r.hypothesis_holds);
  EXPECT_EQ(r.oracle_minimum, 2);
  const auto claw = check_theorem(star_graph(3), "1.3", {.l = 2});
  EXPECT_EQ(claw.verdict, Verdict::Vacuous);
  EXPECT_EQ(claw.claw_free, false);
  const auto s = gen_sharpness(2, 1);
  const auto sharp = check_theorem(s.graph, "1.10", {.k = 2});
  EXPECT_EQ(sharp.verdict, Verdict::Vacuous);
  ASSERT_EQ(sharp.terms.size(), 1u);
  EXPECT_EQ(sharp.terms[0].value, Sigma(15));
  EXPECT_EQ(sharp.terms[0].threshold, 16);
  EXPECT_EQ(check_theorem(Graph::from_edges(3, {{0, 1}}), "1.2", {.l = 2}).verdict, Verdict::Vacuous);
  EXPECT_EQ(to_string(Verdict::Violation), "VIOLATION");
}

TEST(Conformance, RejectsBadRequests) {
  EXPECT_THROW(check_theorem(cycle_graph(5), "2.1", {.l = 2}), GraphError);
  EXPECT_THROW(check_theorem(cycle_graph(5), "1.3", {}), GraphError);
  EXPECT_THROW(check_theorem(cycle_graph(5), "1.3", {.l = 1}), GraphError);
  EXPECT_EQ(theorem_ids().size(), 10u);
}

TEST(Conformance, VertexConnectivity) {
  EXPECT_EQ(vertex_connectivity(complete_graph(5)), 4);
  EXPECT_EQ(vertex_connectivity(cycle_graph(6)), 2);
  EXPECT_EQ(vertex_connectivity(path_graph(4)), 1);
  EXPECT_EQ(vertex_connectivity(Graph::from_edges(4, {{0, 1}, {2, 3}})), 0);
}

TEST(ConformanceProperty, NoViolationOnSmallGraphs) {
  for (int n = 1; n <= 5; ++n)
    for_each_labeled_graph(n, [&](const Graph& g) {
      if (!is_connected(g)) return;
      for (const auto& id : theorem_ids()) {
        TheoremParams p;
        if (id == "1.1") p = {.l = 2, .m = 1};
        else if (id == "1.2" || id == "1.3") p = {.l = 2};
        else if (id == "1.6") p = {.k = 0};
        else p = {.k = 2};
        const auto r = check_theorem(g, id, p);
        EXPECT_NE(r.verdict, Verdict::Violation) << id << " n=" << n;
      }
    });
}

TEST(Sharpness, GridValues) {
  for (int k = 2; k <= 4; ++k)
    for (int m = 1; m <= 3; ++m) {
      const auto s = gen_sharpness(k, m);
      EXPECT_EQ(s.graph.order(), (k + 1) * (2 * m + 4));
      EXPECT_EQ(s.expected.n, s.graph.order());
      EXPECT_EQ(s.expected.sigma, static_cast<long>((k + 1) * (2 * m + 3)));
      EXPECT_TRUE(is_connected(s.graph));
      EXPECT_TRUE(is_claw_free(s.graph));
    }
  const auto s = gen_sharpness(3, 2);
  EXPECT_EQ(s.graph.order(), 32);
  EXPECT_EQ(sigma_p_m(s.graph, 12, 2).value, Sigma(28));
  EXPECT_THROW(gen_sharpness(1, 1), GraphError);
  EXPECT_THROW(gen_sharpness(2, 0), GraphError);
}

TEST(Sharpness, NaturalTreeShape) {
  const auto s = gen_sharpness(3, 2);
  const auto t = sharpness_natural_tree(s);
  const auto r = stem_report(t);
  EXPECT_EQ(r.rstem_leaves.size(), 4u);
  for (const auto& b : s.blocks) EXPECT_TRUE(r.rstem_leaves.contains(b.x));
}

TEST(RandomGraphs, DeterministicAndValid) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto a = random_claw_free(9, 0.5, seed);
    EXPECT_EQ(a, random_claw_free(9, 0.5, seed));
    EXPECT_TRUE(is_connected(a));
    EXPECT_TRUE(is_claw_free(a));
    const auto c = random_connected(9, 0.3, seed);
    EXPECT_TRUE(is_connected(c));
  }
  EXPECT_EQ(random_claw_free(1, 0.5, 0).order(), 1);
}

TEST(RandomGraphs, CorpusFollowsSpec) {
  const auto corpus = random_corpus({.count = 50, .seed = 9});
  ASSERT_EQ(corpus.size(), 50u);
  for (const auto& g : corpus) {
    EXPECT_GE(g.order(), 6);
    EXPECT_LE(g.order(), 9);
    EXPECT_TRUE(is_claw_free(g));
    EXPECT_TRUE(is_connected(g));
  }
  const auto again = random_corpus({.count = 50, .seed = 9});
  EXPECT_EQ(corpus, again);
}

TEST(RandomGraphs, LabeledGraphCount) {
  int total = 0, connected = 0;
  for_each_labeled_graph(4, [&](const Graph& g) {
    ++total;
    if (is_connected(g)) ++connected;
  });
  EXPECT_EQ(total, 64);
  EXPECT_EQ(connected, 38);
}
