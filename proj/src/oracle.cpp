#include "rstem/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <random>
#include <stdexcept>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace rstem {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << static_cast<unsigned>(v); }

// Edge-index backtracking. Including an edge is tried first and is allowed
// when it joins two forest components; excluding it is allowed when the
// forest plus the undecided edges still spans the graph. Every branch thus
// ends in a spanning tree.
template <class Visit>
class Enumerator {
 public:
  Enumerator(const Graph& g, std::uint64_t cap, Visit& visit) : n_(g.order()), cap_(cap), visit_(visit) {
    if (n_ == 0) throw GraphError("graph has no vertices");
    if (n_ > 64) throw GraphError("spanning-tree enumeration supports at most 64 vertices");
    edges_ = g.edges();
    const std::size_t m = edges_.size();
    suffix_.assign((m + 1) * static_cast<std::size_t>(n_), 0);
    for (std::size_t i = m; i-- > 0;) {
      std::copy_n(&suffix_[(i + 1) * n_], n_, &suffix_[i * n_]);
      suffix_[i * n_ + static_cast<std::size_t>(edges_[i].u)] |= bit(edges_[i].v);
      suffix_[i * n_ + static_cast<std::size_t>(edges_[i].v)] |= bit(edges_[i].u);
    }
    for (int v = 0; v < n_; ++v) comp_[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(v);
    if (!connectable(0)) throw GraphError("graph is not connected");
  }

  EnumerationSummary run() {
    rec(0);
    return {count_, capped_, stopped_};
  }

 private:
  bool connectable(std::size_t i) const {
    const Mask* sfx = &suffix_[i * static_cast<std::size_t>(n_)];
    Mask seen = bit(0), frontier = bit(0);
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) {
        const int v = std::countr_zero(f);
        next |= forest_[static_cast<std::size_t>(v)] | sfx[v];
      }
      frontier = next & ~seen;
      seen |= frontier;
    }
    return std::popcount(seen) == n_;
  }

  void rec(std::size_t i) {
    if (depth_ == n_ - 1) {
      if (count_ == cap_) {
        capped_ = true;
        halt_ = true;
        return;
      }
      ++count_;
      if (!visit_(std::span<const Edge>(chosen_.data(), static_cast<std::size_t>(depth_)))) {
        stopped_ = true;
        halt_ = true;
      }
      return;
    }
    const Edge e = edges_[i];
    const auto cu = comp_[static_cast<std::size_t>(e.u)], cv = comp_[static_cast<std::size_t>(e.v)];
    if (cu == cv) {
      rec(i + 1);
      return;
    }
    const auto saved = comp_;
    for (int v = 0; v < n_; ++v)
      if (comp_[static_cast<std::size_t>(v)] == cv) comp_[static_cast<std::size_t>(v)] = cu;
    forest_[static_cast<std::size_t>(e.u)] |= bit(e.v);
    forest_[static_cast<std::size_t>(e.v)] |= bit(e.u);
    chosen_[static_cast<std::size_t>(depth_++)] = e;
    rec(i + 1);
    --depth_;
    forest_[static_cast<std::size_t>(e.u)] &= ~bit(e.v);
    forest_[static_cast<std::size_t>(e.v)] &= ~bit(e.u);
    comp_ = saved;
    if (halt_) return;
    if (connectable(i + 1)) rec(i + 1);
  }

  int n_;
  std::uint64_t cap_;
  Visit& visit_;
  std::vector<Edge> edges_;
  std::vector<Mask> suffix_;
  std::array<Mask, 64> forest_{};
  std::array<std::uint8_t, 64> comp_{};
  std::array<Edge, 64> chosen_{};
  int depth_ = 0;
  std::uint64_t count_ = 0;
  bool capped_ = false;
  bool stopped_ = false;
  bool halt_ = false;
};

template <class Visit>
EnumerationSummary enumerate(const Graph& g, std::uint64_t cap, Visit& visit) {
  if (cap == 0) throw GraphError("tree cap must be at least 1");
  return Enumerator<Visit>(g, cap, visit).run();
}

// Objective of a tree given by its edges, on adjacency masks.
int fast_objective(TreeObjective o, int n, std::span<const Edge> edges) {
  std::array<Mask, 64> adj{};
  for (const Edge& e : edges) {
    adj[static_cast<std::size_t>(e.u)] |= bit(e.v);
    adj[static_cast<std::size_t>(e.v)] |= bit(e.u);
  }
  const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
  Mask leaves = 0, branches = 0;
  for (int v = 0; v < n; ++v) {
    const int d = std::popcount(adj[static_cast<std::size_t>(v)]);
    if (d == 1) leaves |= bit(v);
    if (d >= 3) branches |= bit(v);
  }
  auto count_in = [&](Mask part, auto pred) {
    int c = 0;
    for (Mask p = part; p; p &= p - 1) {
      const int v = std::countr_zero(p);
      if (pred(std::popcount(adj[static_cast<std::size_t>(v)] & part))) ++c;
    }
    return c;
  };
  switch (o) {
    case TreeObjective::Leaves:
      return std::popcount(leaves);
    case TreeObjective::StemLeaves:
      return count_in(all & ~leaves, [](int d) { return d == 1; });
    case TreeObjective::StemBranches:
      return count_in(all & ~leaves, [](int d) { return d >= 3; });
    case TreeObjective::RStemLeaves:
    case TreeObjective::RStemBranches: {
      if (!branches) return 0;
      Mask removed = 0;
      for (Mask l = leaves; l; l &= l - 1) {
        int prev = -1, cur = std::countr_zero(l);
        while (!(branches & bit(cur))) {
          removed |= bit(cur);
          Mask next = adj[static_cast<std::size_t>(cur)];
          if (prev >= 0) next &= ~bit(prev);
          prev = cur;
          cur = std::countr_zero(next);
        }
      }
      const Mask r = all & ~removed;
      if (o == TreeObjective::RStemLeaves) return count_in(r, [](int d) { return d == 1; });
      return count_in(r, [](int d) { return d >= 3; });
    }
  }
  return 0;
}

long floor_div2(long a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

}  // namespace

EnumerationSummary enumerate_spanning_trees(const Graph& g, const TreeVisitor& visit, std::uint64_t cap) {
  auto call = [&](std::span<const Edge> edges) { return visit(edges); };
  return enumerate(g, cap, call);
}

EnumerationSummary count_spanning_trees(const Graph& g, std::uint64_t cap) {
  auto keep_going = [](std::span<const Edge>) { return true; };
  return enumerate(g, cap, keep_going);
}

std::string matrix_tree_count(const Graph& g) {
  using boost::multiprecision::cpp_int;
  const int n = g.order();
  if (n == 0) throw GraphError("graph has no vertices");
  const int size = n - 1;
  if (size == 0) return "1";
  std::vector<std::vector<cpp_int>> a(static_cast<std::size_t>(size), std::vector<cpp_int>(static_cast<std::size_t>(size)));
  for (int i = 1; i < n; ++i) {
    a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)] = g.degree(i);
    for (Vertex w : g.neighbors(i))
      if (w > 0) a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(w - 1)] = -1;
  }
  // Bareiss elimination: every intermediate value is an exact minor.
  cpp_int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < static_cast<std::size_t>(size); ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < a.size() && a[r][k] == 0) ++r;
      if (r == a.size()) return "0";
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < a.size(); ++i) {
      for (std::size_t j = k + 1; j < a.size(); ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  cpp_int det = a.back().back();
  if (sign < 0) det = -det;
  return det.str();
}

std::string to_string(TreeObjective o) {
  switch (o) {
    case TreeObjective::Leaves: return "leaves";
    case TreeObjective::StemLeaves: return "stem-leaves";
    case TreeObjective::StemBranches: return "stem-branches";
    case TreeObjective::RStemLeaves: return "rstem-leaves";
    case TreeObjective::RStemBranches: return "rstem-branches";
  }
  return "?";
}

int tree_objective(TreeObjective o, const SpanningTree& t) {
  const auto r = stem_report(t);
  auto stem_count = [&](bool want_leaves) {
    int c = 0;
    for (Vertex v : r.stem) {
      int d = 0;
      for (Vertex w : t.neighbors(v))
        if (r.stem.contains(w)) ++d;
      if (want_leaves ? d == 1 : d >= 3) ++c;
    }
    return c;
  };
  switch (o) {
    case TreeObjective::Leaves: return static_cast<int>(r.leaves.size());
    case TreeObjective::StemLeaves: return stem_count(true);
    case TreeObjective::StemBranches: return stem_count(false);
    case TreeObjective::RStemLeaves: return static_cast<int>(r.rstem_leaves.size());
    case TreeObjective::RStemBranches: {
      int c = 0;
      for (Vertex v : r.rstem)
        if (r.rstem_degree(t, v) >= 3) ++c;
      return c;
    }
  }
  return 0;
}

OracleResult min_tree(const Graph& g, TreeObjective o, std::uint64_t cap) {
  const int n = g.order();
  const int floor_value = o == TreeObjective::Leaves && n >= 2 ? 2 : 0;
  int best = INT_MAX;
  std::vector<Edge> best_edges;
  auto visit = [&](std::span<const Edge> edges) {
    const int value = fast_objective(o, n, edges);
    if (value < best) {
      best = value;
      best_edges.assign(edges.begin(), edges.end());
    }
    return best > floor_value;
  };
  const auto summary = enumerate(g, cap, visit);
  OracleResult out;
  out.objective = o;
  out.minimum = best;
  out.witness = SpanningTree::from_edges(g, best_edges);
  out.trees_examined = summary.count;
  out.capped = summary.capped;
  return out;
}

OracleResult min_leaf_tree(const Graph& g, std::uint64_t cap) { return min_tree(g, TreeObjective::Leaves, cap); }

OracleResult min_rstem_leaf_tree(const Graph& g, std::uint64_t cap) {
  return min_tree(g, TreeObjective::RStemLeaves, cap);
}

// ---------------------------------------------------------------------------
// Conformance
// ---------------------------------------------------------------------------

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Conforms: return "Conforms";
    case Verdict::Vacuous: return "Vacuous";
    case Verdict::Violation: return "VIOLATION";
  }
  return "?";
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"1.1", "1.2", "1.3", "1.4", "1.5", "1.6", "1.7", "1.8", "1.9", "1.10"};
  return ids;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n > 24) throw GraphError("vertex connectivity is computed by exhaustion, n <= 24");
  if (!is_connected(g)) return 0;
  if (g.edge_count() == static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2) return n - 1;
  int best = n - 1;
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  for (std::uint32_t cut = 1; cut < full; ++cut) {
    const int size = std::popcount(cut);
    if (size >= best || n - size < 2) continue;
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
      if (!(cut >> v & 1u)) keep.push_back(v);
    if (!is_connected(induced_subgraph(g, VertexSet(keep)).graph)) best = size;
  }
  return best;
}

namespace {

int need(const std::optional<int>& p, const char* name, int floor_value, const std::string& id) {
  if (!p) throw GraphError("theorem " + id + " needs parameter " + name);
  if (*p < floor_value)
    throw GraphError("theorem " + id + " needs " + name + " >= " + std::to_string(floor_value));
  return *p;
}

HypothesisTerm at_least(std::string name, Sigma value, long threshold) {
  return {std::move(name), value, ">=", threshold, value >= threshold};
}

HypothesisTerm at_most(std::string name, long value, long threshold) {
  return {std::move(name), Sigma(value), "<=", threshold, value <= threshold};
}

std::string sigma_name(int p, int m) {
  return m == 2 ? "sigma_" + std::to_string(p) : "sigma^" + std::to_string(m) + "_" + std::to_string(p);
}

Sigma sigma_of(const Graph& g, int p, int m) { return sigma_p_m(g, p, m).value; }

}  // namespace

ConformanceReport check_theorem(const Graph& g, const std::string& id, const TheoremParams& params,
                                std::uint64_t cap) {
  ConformanceReport rep;
  rep.theorem = id;
  rep.params = params;
  const int n = g.order();
  rep.n = n;
  rep.connected = n > 0 && is_connected(g);
  bool structural = rep.connected;
  auto require_claw_free = [&] {
    rep.claw_free = is_claw_free(g);
    structural = structural && *rep.claw_free;
  };
  auto alpha = [&](int m) { return static_cast<long>(alpha_m(g, m).size); };

  if (id == "1.1") {
    const int l = need(params.l, "l", 2, id), m = need(params.m, "m", 1, id);
    rep.vertex_connectivity = vertex_connectivity(g);
    structural = structural && *rep.vertex_connectivity >= m;
    rep.terms.push_back(at_most("alpha", alpha(2), m + l - 1));
    rep.conclusion_objective = TreeObjective::Leaves;
    rep.conclusion_bound = l;
  } else if (id == "1.2") {
    const int l = need(params.l, "l", 2, id);
    rep.terms.push_back(at_least(sigma_name(2, 2), sigma_of(g, 2, 2), n - l + 1));
    rep.conclusion_objective = TreeObjective::Leaves;
    rep.conclusion_bound = l;
  } else if (id == "1.3") {
    const int l = need(params.l, "l", 2, id);
    require_claw_free();
    rep.terms.push_back(at_least(sigma_name(l + 1, 2), sigma_of(g, l + 1, 2), n - l));
    rep.conclusion_objective = TreeObjective::Leaves;
    rep.conclusion_bound = l;
  } else if (id == "1.4") {
    const int k = need(params.k, "k", 2, id);
    rep.terms.push_back(at_least(sigma_name(3, 2), sigma_of(g, 3, 2), n - 2 * k + 1));
    rep.conclusion_objective = TreeObjective::StemLeaves;
    rep.conclusion_bound = k;
  } else if (id == "1.5") {
    const int k = need(params.k, "k", 2, id);
    rep.terms.push_back(at_most("alpha^4", alpha(4), k));
    rep.terms.push_back(at_least(sigma_name(k + 1, 2), sigma_of(g, k + 1, 2), n - k - 1));
    rep.conclusion_objective = TreeObjective::StemLeaves;
    rep.conclusion_bound = k;
  } else if (id == "1.6") {
    const int k = need(params.k, "k", 0, id);
    rep.terms.push_back(at_most("alpha^4", alpha(4), k + 2));
    rep.terms.push_back(at_least(sigma_name(k + 3, 4), sigma_of(g, k + 3, 4), n - 2 * k - 3));
    rep.conclusion_objective = TreeObjective::StemBranches;
    rep.conclusion_bound = k;
  } else if (id == "1.7") {
    const int k = need(params.k, "k", 2, id);
    rep.terms.push_back(at_most("alpha", alpha(2), 2 * k + 2));
    rep.terms.push_back(at_least(sigma_name(k + 1, 4), sigma_of(g, k + 1, 4), floor_div2(n - k)));
    rep.conclusion_objective = TreeObjective::RStemLeaves;
    rep.conclusion_bound = k;
  } else if (id == "1.8") {
    const int k = need(params.k, "k", 2, id);
    rep.terms.push_back(at_least(sigma_name(k + 3, 4), sigma_of(g, k + 3, 4), floor_div2(n - 2 * k - 2)));
    rep.conclusion_objective = TreeObjective::RStemBranches;
    rep.conclusion_bound = k;
  } else if (id == "1.9") {
    const int k = need(params.k, "k", 2, id);
    require_claw_free();
    rep.terms.push_back(at_most("alpha", alpha(2), 3 * k + 2));
    rep.terms.push_back(at_least(sigma_name(k + 1, 6), sigma_of(g, k + 1, 6), floor_div2(n - 4 * k - 2)));
    rep.conclusion_objective = TreeObjective::RStemLeaves;
    rep.conclusion_bound = k;
  } else if (id == "1.10") {
    const int k = need(params.k, "k", 2, id);
    require_claw_free();
    rep.terms.push_back(at_least(sigma_name(3 * k + 3, 2), sigma_of(g, 3 * k + 3, 2), n - k));
    rep.conclusion_objective = TreeObjective::RStemLeaves;
    rep.conclusion_bound = k;
  } else {
    throw GraphError("unknown theorem id '" + id + "'");
  }

  rep.hypothesis_holds =
      structural && std::any_of(rep.terms.begin(), rep.terms.end(), [](const HypothesisTerm& t) { return t.holds; });
  if (!rep.hypothesis_holds) {
    rep.verdict = Verdict::Vacuous;
    return rep;
  }
  const auto oracle = min_tree(g, rep.conclusion_objective, cap);
  rep.oracle_minimum = oracle.minimum;
  rep.capped = oracle.capped;
  rep.conclusion_holds = oracle.minimum <= rep.conclusion_bound;
  // A capped search only gives an upper bound, which still proves the conclusion
  // when it is met; an unmet capped bound is reported as a violation too, so it
  // cannot pass silently.
  rep.verdict = *rep.conclusion_holds ? Verdict::Conforms : Verdict::Violation;
  return rep;
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

SharpnessGraph gen_sharpness(int k, int m) {
  if (k < 2) throw GraphError("sharpness family needs k >= 2");
  if (m < 1) throw GraphError("sharpness family needs m >= 1");
  SharpnessGraph s;
  s.k = k;
  s.m = m;
  const int blocks = k + 1;
  const int n = blocks * (2 * m + 4);
  std::vector<Edge> edges;
  Vertex next = blocks;
  for (int i = 0; i < blocks; ++i) {
    SharpnessBlock b;
    b.w = i;
    b.x = next++;
    b.xy = next++;
    b.xz = next++;
    for (int j = 0; j < m; ++j) b.r.push_back(next++);
    for (int j = 0; j < m; ++j) b.h.push_back(next++);
    s.blocks.push_back(std::move(b));
  }
  for (int i = 0; i < blocks; ++i)
    for (int j = i + 1; j < blocks; ++j) edges.push_back({i, j});
  auto clique_joined = [&](const std::vector<Vertex>& c, Vertex hub) {
    for (std::size_t a = 0; a < c.size(); ++a) {
      edges.push_back({hub, c[a]});
      for (std::size_t b = a + 1; b < c.size(); ++b) edges.push_back({c[a], c[b]});
    }
  };
  for (const auto& b : s.blocks) {
    edges.push_back({b.x, b.w});
    edges.push_back({b.x, b.xy});
    edges.push_back({b.x, b.xz});
    edges.push_back({b.xy, b.xz});
    clique_joined(b.r, b.xy);
    clique_joined(b.h, b.xz);
  }
  s.graph = Graph::from_edges(n, edges);
  if (!is_connected(s.graph) || !is_claw_free(s.graph))
    throw std::logic_error("sharpness construction is not a connected claw-free graph");
  s.expected = {n, static_cast<long>(blocks) * (2 * m + 3), k + 1};
  return s;
}

SpanningTree sharpness_natural_tree(const SharpnessGraph& s) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 <= s.k; ++i) edges.push_back({i, i + 1});
  for (const auto& b : s.blocks) {
    edges.push_back({b.x, b.w});
    edges.push_back({b.x, b.xy});
    edges.push_back({b.x, b.xz});
    Vertex prev = b.xy;
    for (Vertex v : b.r) edges.push_back({std::exchange(prev, v), v});
    prev = b.xz;
    for (Vertex v : b.h) edges.push_back({std::exchange(prev, v), v});
  }
  return SpanningTree::from_edges(s.graph, edges);
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double unit_interval(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

namespace {

constexpr int kMaxDraws = 1000;

Graph draw_gnp(int n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (unit_interval(rng()) < p) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

void check_gnp_args(int n, double p) {
  if (n < 1) throw GraphError("random graph needs n >= 1");
  if (!(p > 0.0 && p < 1.0)) throw GraphError("edge probability must lie in (0, 1)");
}

std::uint64_t draw_seed(std::uint64_t seed, int attempt) {
  return attempt == 0 ? seed : mix_seed(seed ^ (static_cast<std::uint64_t>(attempt) << 32));
}

}  // namespace

Graph random_claw_free(int n, double edge_prob, std::uint64_t seed) {
  check_gnp_args(n, edge_prob);
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    std::mt19937_64 rng(draw_seed(seed, attempt));
    Graph g = draw_gnp(n, edge_prob, rng);
    int budget = n * n;
    while (budget-- > 0) {
      const auto claw = find_claw(g);
      if (!claw) break;
      // Prefer a claw edge whose deletion keeps the graph connected.
      Vertex drop = claw->leaves[0];
      for (Vertex leaf : claw->leaves)
        if (is_connected(remove_edge(g, claw->center, leaf))) {
          drop = leaf;
          break;
        }
      g = remove_edge(g, claw->center, drop);
    }
    if (is_claw_free(g) && is_connected(g)) return g;
  }
  throw std::runtime_error("random_claw_free: no connected claw-free graph after " + std::to_string(kMaxDraws) +
                           " draws");
}

Graph random_connected(int n, double edge_prob, std::uint64_t seed) {
  check_gnp_args(n, edge_prob);
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    std::mt19937_64 rng(draw_seed(seed, attempt));
    Graph g = draw_gnp(n, edge_prob, rng);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("random_connected: no connected graph after " + std::to_string(kMaxDraws) + " draws");
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& visit) {
  if (n < 0 || n > 8) throw GraphError("labeled graph enumeration supports 0 <= n <= 8");
  std::vector<Edge> pairs;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) pairs.push_back({u, v});
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1u) edges.push_back(pairs[i]);
    visit(Graph::from_edges(n, edges));
  }
}

std::vector<Graph> random_corpus(const RandomCorpusSpec& spec) {
  if (spec.count < 0 || spec.n_min < 1 || spec.n_max < spec.n_min) throw GraphError("bad random corpus spec");
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(spec.count));
  const auto span = static_cast<std::uint64_t>(spec.n_max - spec.n_min + 1);
  for (int i = 0; i < spec.count; ++i) {
    const std::uint64_t s = mix_seed(spec.seed + static_cast<std::uint64_t>(i));
    const int n = spec.n_min + static_cast<int>(s % span);
    const double p = spec.p_min + (spec.p_max - spec.p_min) * unit_interval(mix_seed(s));
    out.push_back(spec.claw_free ? random_claw_free(n, p, s) : random_connected(n, p, s));
  }
  return out;
}

}  // namespace rstem
