#include <gtest/gtest.h>

#include <random>

#include "rstem/invariants.hpp"
#include "rstem/oracle.hpp"

using namespace rstem;

namespace {

// Full subset enumeration, independent of the branch-and-bound.
int naive_alpha(const Graph& g, int m) {
  const int n = g.order();
  std::vector<std::vector<int>> dist;
  for (Vertex v = 0; v < n; ++v) dist.push_back(bfs_distances(g, v));
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((mask >> u & 1u) && (mask >> v & 1u)) {
          const int d = dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
          ok = d < 0 || d >= m;
        }
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

long naive_sigma(const Graph& g, int p, int m) {
  const int n = g.order();
  long best = -1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != p) continue;
    std::vector<Vertex> s;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) s.push_back(v);
    if (!verify_distance_independent(g, {m, VertexSet(s)})) continue;
    const long w = degree_sum(g, VertexSet(s));
    if (best < 0 || w < best) best = w;
  }
  return best;
}

}  // namespace

TEST(Alpha, Examples) {
  EXPECT_EQ(alpha_m(complete_graph(6), 2).size, 1);
  EXPECT_EQ(alpha_m(cycle_graph(5), 2).size, 2);
  const auto p7 = alpha_m(path_graph(7), 4);
  EXPECT_EQ(p7.size, 2);
  EXPECT_TRUE(verify_distance_independent(path_graph(7), p7.witness));
  EXPECT_EQ(alpha_m(cycle_graph(6), 2).size, 3);
  EXPECT_THROW(alpha_m(cycle_graph(6), 1), GraphError);
}

TEST(Alpha, CrossComponentPairsAreFarApart) {
  const auto two = Graph::from_edges(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(alpha_m(two, 5).size, 2);
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma_p_m(cycle_graph(6), 2, 2).value, Sigma(4));
  const auto k4 = sigma_p_m(complete_graph(4), 2, 2);
  EXPECT_TRUE(k4.value.is_infinite());
  EXPECT_FALSE(k4.witness.has_value());
  EXPECT_EQ(sigma_p_m(star_graph(3), 3, 2).value, Sigma(3));
  EXPECT_THROW(sigma_p_m(cycle_graph(6), 1, 2), GraphError);
  EXPECT_THROW(sigma_p_m(cycle_graph(6), 2, 1), GraphError);
}

TEST(Sigma, SharpnessGraphValue) {
  const auto s = gen_sharpness(2, 1);
  const auto r = sigma_p_m(s.graph, 9, 2);
  EXPECT_EQ(r.value, Sigma(15));
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(degree_sum(s.graph, *r.witness), 15);
  EXPECT_TRUE(verify_distance_independent(s.graph, {2, *r.witness}));
}

TEST(Sigma, InfinityOrdering) {
  const auto inf = Sigma::infinity();
  EXPECT_TRUE(inf >= 1'000'000L);
  EXPECT_TRUE(inf > Sigma(5));
  EXPECT_TRUE(Sigma(5) <= 5L);
  EXPECT_EQ(inf, Sigma::infinity());
  EXPECT_EQ(inf.str(), "inf");
  EXPECT_THROW(inf.value(), std::logic_error);
}

TEST(Claw, Examples) {
  const auto w = find_claw(star_graph(3));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->center, 0);
  EXPECT_EQ(w->leaves, (std::array<Vertex, 3>{1, 2, 3}));
  EXPECT_TRUE(verify_claw(star_graph(3), *w));
  for (int n = 3; n <= 9; ++n) EXPECT_TRUE(is_claw_free(cycle_graph(n)));
  EXPECT_TRUE(is_claw_free(gen_sharpness(2, 1).graph));
  EXPECT_FALSE(is_k1t_free(star_graph(4), 4));
  EXPECT_TRUE(is_k1t_free(star_graph(3), 4));
  EXPECT_THROW(find_induced_star(star_graph(3), 2), GraphError);
}

TEST(InvariantProperty, AgreesWithSubsetEnumeration) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 150; ++round) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<Edge> edges;
    const double p = unit_interval(rng());
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (unit_interval(rng()) < p) edges.push_back({u, v});
    const auto g = Graph::from_edges(n, edges);
    int previous = n;
    for (int m = 2; m <= 5; ++m) {
      const auto a = alpha_m(g, m);
      ASSERT_EQ(a.size, naive_alpha(g, m)) << "n=" << n << " m=" << m;
      ASSERT_TRUE(verify_distance_independent(g, a.witness));
      EXPECT_LE(a.size, previous);
      previous = a.size;
      for (int p = 2; p <= 4; ++p) {
        const auto s = sigma_p_m(g, p, m);
        EXPECT_EQ(!s.value.is_infinite(), a.size >= p);
        const long naive = naive_sigma(g, p, m);
        if (naive < 0) {
          EXPECT_TRUE(s.value.is_infinite());
        } else {
          EXPECT_EQ(s.value, Sigma(naive));
          ASSERT_TRUE(s.witness.has_value());
          EXPECT_EQ(static_cast<int>(s.witness->size()), p);
          EXPECT_EQ(degree_sum(g, *s.witness), naive);
        }
      }
    }
    if (const auto w = find_claw(g)) EXPECT_TRUE(verify_claw(g, *w));
  }
}
