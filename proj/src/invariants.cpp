#include "rstem/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace rstem {

namespace {

class Bitset {
 public:
  explicit Bitset(int n = 0) : words_((static_cast<std::size_t>(n) + 63) / 64, 0) {}

  void set(int i) { words_[idx(i)] |= bit(i); }
  void reset(int i) { words_[idx(i)] &= ~bit(i); }
  bool test(int i) const { return (words_[idx(i)] & bit(i)) != 0; }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }
  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  Bitset& and_not(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      for (std::uint64_t w = words_[i]; w != 0; w &= w - 1)
        f(static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
  }

 private:
  static std::size_t idx(int i) { return static_cast<std::size_t>(i) / 64; }
  static std::uint64_t bit(int i) { return std::uint64_t{1} << (static_cast<unsigned>(i) % 64); }
  std::vector<std::uint64_t> words_;
};

// Conflict graph: u and v conflict when they are distinct and closer than m.
// closed[v] is the conflict neighborhood of v plus v itself.
struct ConflictGraph {
  int n = 0;
  std::vector<Bitset> closed;

  ConflictGraph(const Graph& g, int m) : n(g.order()), closed(static_cast<std::size_t>(g.order()), Bitset(g.order())) {
    for (Vertex u = 0; u < n; ++u) {
      const auto dist = bfs_distances(g, u);
      auto& row = closed[static_cast<std::size_t>(u)];
      for (Vertex v = 0; v < n; ++v) {
        const int d = dist[static_cast<std::size_t>(v)];
        if (d >= 0 && d < m) row.set(v);
      }
    }
  }

  bool conflict(int u, int v) const { return closed[static_cast<std::size_t>(u)].test(v); }

  // Greedy partition of `cand` into conflict cliques, visiting vertices in
  // `order`. An independent set meets every clique at most once.
  std::vector<std::vector<int>> clique_cover(const Bitset& cand, const std::vector<int>& order) const {
    std::vector<std::vector<int>> cliques;
    for (int v : order) {
      if (!cand.test(v)) continue;
      bool placed = false;
      for (auto& c : cliques) {
        if (std::all_of(c.begin(), c.end(), [&](int u) { return conflict(u, v); })) {
          c.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) cliques.push_back({v});
    }
    return cliques;
  }
};

struct AlphaSearch {
  const ConflictGraph& h;
  std::vector<int> order;
  std::vector<int> current;
  std::vector<int> best;

  void run(Bitset cand) {
    if (!cand.any()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    const auto cover = h.clique_cover(cand, order);
    if (current.size() + cover.size() <= best.size()) return;
    // Branch on the first vertex of the last clique: it is the vertex the
    // greedy cover had most trouble placing.
    const int v = cover.back().front();
    Bitset with = cand;
    with.and_not(h.closed[static_cast<std::size_t>(v)]);
    current.push_back(v);
    run(with);
    current.pop_back();
    cand.reset(v);
    run(cand);
  }
};

struct SigmaSearch {
  const ConflictGraph& h;
  const std::vector<long>& weight;
  int p;
  std::vector<int> order;  // ascending weight, then id
  std::vector<int> current;
  long current_weight = 0;
  std::vector<int> best;
  long best_weight = std::numeric_limits<long>::max();

  void run(Bitset cand) {
    const int need = p - static_cast<int>(current.size());
    if (need == 0) {
      if (current_weight < best_weight) {
        best_weight = current_weight;
        best = current;
      }
      return;
    }
    const auto cover = h.clique_cover(cand, order);
    if (static_cast<int>(cover.size()) < need) return;
    std::vector<long> mins;
    mins.reserve(cover.size());
    for (const auto& c : cover) mins.push_back(weight[static_cast<std::size_t>(c.front())]);
    std::sort(mins.begin(), mins.end());
    long bound = current_weight;
    for (int i = 0; i < need; ++i) bound += mins[static_cast<std::size_t>(i)];
    if (bound >= best_weight) return;

    int v = -1;
    for (int u : order)
      if (cand.test(u)) {
        v = u;
        break;
      }
    Bitset with = cand;
    with.and_not(h.closed[static_cast<std::size_t>(v)]);
    current.push_back(v);
    current_weight += weight[static_cast<std::size_t>(v)];
    run(with);
    current_weight -= weight[static_cast<std::size_t>(v)];
    current.pop_back();
    cand.reset(v);
    run(cand);
  }
};

Bitset all_vertices(int n) {
  Bitset b(n);
  for (int v = 0; v < n; ++v) b.set(v);
  return b;
}

}  // namespace

AlphaResult alpha_m(const Graph& g, int m) {
  if (m < 2) throw GraphError("alpha_m needs m >= 2");
  AlphaResult out;
  out.witness.m = m;
  if (g.order() == 0) return out;
  const ConflictGraph h(g, m);
  AlphaSearch search{h, {}, {}, {}};
  search.order.resize(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) search.order[static_cast<std::size_t>(v)] = v;
  std::stable_sort(search.order.begin(), search.order.end(), [&](int a, int b) {
    return h.closed[static_cast<std::size_t>(a)].count() < h.closed[static_cast<std::size_t>(b)].count();
  });
  // Greedy incumbent in the same order.
  Bitset cand = all_vertices(g.order());
  for (int v : search.order)
    if (cand.test(v)) {
      search.best.push_back(v);
      cand.and_not(h.closed[static_cast<std::size_t>(v)]);
    }
  search.run(all_vertices(g.order()));
  out.size = static_cast<int>(search.best.size());
  out.witness.members = VertexSet(search.best);
  return out;
}

long Sigma::value() const {
  if (!value_) throw std::logic_error("sigma is +infinity");
  return *value_;
}

std::strong_ordering operator<=>(const Sigma& a, const Sigma& b) {
  if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
  if (a.is_infinite()) return std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  return *a.value_ <=> *b.value_;
}

SigmaResult sigma_p_m(const Graph& g, int p, int m) {
  if (p < 2) throw GraphError("sigma_p_m needs p >= 2");
  if (m < 2) throw GraphError("sigma_p_m needs m >= 2");
  SigmaResult out;
  if (g.order() < p) return out;
  const ConflictGraph h(g, m);
  std::vector<long> weight(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) weight[static_cast<std::size_t>(v)] = g.degree(v);
  SigmaSearch search{h, weight, p, {}, {}, 0, {}, std::numeric_limits<long>::max()};
  search.order.resize(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) search.order[static_cast<std::size_t>(v)] = v;
  std::stable_sort(search.order.begin(), search.order.end(),
                   [&](int a, int b) { return weight[static_cast<std::size_t>(a)] < weight[static_cast<std::size_t>(b)]; });
  search.run(all_vertices(g.order()));
  if (search.best.empty()) return out;
  out.value = Sigma(search.best_weight);
  out.witness = VertexSet(search.best);
  return out;
}

std::optional<StarWitness> find_induced_star(const Graph& g, int t) {
  if (t < 3) throw GraphError("K_{1,t}-freeness needs t >= 3");
  for (Vertex c = 0; c < g.order(); ++c) {
    const auto nb = g.neighbors(c);
    if (static_cast<int>(nb.size()) < t) continue;
    std::vector<Vertex> chosen;
    // Depth-first over t-subsets of N(c) in lexicographic order, extending
    // only with vertices non-adjacent to everything chosen so far.
    auto extend = [&](auto&& self, std::size_t from) -> bool {
      if (static_cast<int>(chosen.size()) == t) return true;
      for (std::size_t i = from; i < nb.size(); ++i) {
        const Vertex w = nb[i];
        if (std::any_of(chosen.begin(), chosen.end(), [&](Vertex u) { return g.has_edge(u, w); })) continue;
        chosen.push_back(w);
        if (self(self, i + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (extend(extend, 0)) return StarWitness{c, chosen};
  }
  return std::nullopt;
}

bool is_k1t_free(const Graph& g, int t) { return !find_induced_star(g, t).has_value(); }

std::optional<ClawWitness> find_claw(const Graph& g) {
  auto star = find_induced_star(g, 3);
  if (!star) return std::nullopt;
  return ClawWitness{star->center, {star->leaves[0], star->leaves[1], star->leaves[2]}};
}

bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

bool verify_distance_independent(const Graph& g, const DistanceIndependentSet& s) {
  for (Vertex u : s.members) {
    if (!g.contains(u)) return false;
    const auto dist = bfs_distances(g, u);
    for (Vertex v : s.members) {
      if (v == u) continue;
      const int d = dist[static_cast<std::size_t>(v)];
      if (d >= 0 && d < s.m) return false;
    }
  }
  return true;
}

bool verify_claw(const Graph& g, const ClawWitness& w) {
  if (!g.contains(w.center)) return false;
  for (std::size_t i = 0; i < 3; ++i) {
    const Vertex a = w.leaves[i];
    if (!g.contains(a) || a == w.center || !g.has_edge(w.center, a)) return false;
    for (std::size_t j = i + 1; j < 3; ++j)
      if (a == w.leaves[j] || g.has_edge(a, w.leaves[j])) return false;
  }
  return true;
}

}  // namespace rstem
