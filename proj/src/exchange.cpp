#include "rstem/exchange.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace rstem {

// ---------------------------------------------------------------------------
// ObliqueIndex
// ---------------------------------------------------------------------------

ObliqueIndex::ObliqueIndex(const SpanningTree& t)
    : tree_(&t),
      parent_(static_cast<std::size_t>(t.order()), -1),
      tin_(static_cast<std::size_t>(t.order()), 0),
      tout_(static_cast<std::size_t>(t.order()), 0) {
  if (t.order() == 0) return;
  int clock = 0;
  std::vector<std::pair<Vertex, std::size_t>> stack{{0, 0}};
  parent_[0] = 0;
  tin_[0] = clock++;
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    const auto nb = t.neighbors(v);
    if (i == nb.size()) {
      tout_[static_cast<std::size_t>(v)] = clock;
      stack.pop_back();
      continue;
    }
    const Vertex w = nb[i++];
    if (w == parent_[static_cast<std::size_t>(v)]) continue;
    parent_[static_cast<std::size_t>(w)] = v;
    tin_[static_cast<std::size_t>(w)] = clock++;
    stack.emplace_back(w, 0);
  }
  parent_[0] = -1;
}

bool ObliqueIndex::below(Vertex top, Vertex v) const {
  const auto a = static_cast<std::size_t>(top), b = static_cast<std::size_t>(v);
  return tin_[a] <= tin_[b] && tin_[b] < tout_[a];
}

Vertex ObliqueIndex::near(const Edge& e, Vertex v) const {
  const Vertex child = parent_[static_cast<std::size_t>(e.u)] == e.v ? e.u : e.v;
  const Vertex top = e.other(child);
  return below(child, v) ? child : top;
}

Vertex ObliqueIndex::far(const Edge& e, Vertex v) const { return e.other(near(e, v)); }

Vertex ObliqueIndex::toward(Vertex u, Vertex v) const {
  if (u == v) throw GraphError("toward() needs distinct vertices");
  if (!below(u, v)) return parent_[static_cast<std::size_t>(u)];
  for (Vertex c : tree_->neighbors(u))
    if (c != parent_[static_cast<std::size_t>(u)] && below(c, v)) return c;
  throw GraphError("inconsistent tree index");
}

bool is_oblique_neighbor(const Graph& g, const ObliqueIndex& idx, Vertex v, const Edge& e) {
  const Vertex far = idx.far(e, v);
  return far != v && g.has_edge(v, far);
}

bool is_oblique_neighbor(const Graph& g, const SpanningTree& t, Vertex v, const Edge& e) {
  if (!t.has_edge(e.u, e.v)) throw GraphError("edge " + to_string(e) + " is not a tree edge");
  return is_oblique_neighbor(g, ObliqueIndex(t), v, e.canonical());
}

std::vector<Edge> oblique_edges(const Graph& g, const SpanningTree& t, const ObliqueIndex& idx, Vertex v) {
  std::vector<Edge> out;
  for (const Edge& e : t.edges())
    if (is_oblique_neighbor(g, idx, v, e)) out.push_back(e);
  return out;
}

bool are_pseudoadjacent(const Graph& g, const SpanningTree& t, Vertex u, Vertex v) {
  if (u == v) throw GraphError("pseudoadjacency is defined for distinct vertices");
  const ObliqueIndex idx(t);
  for (const Edge& e : t.edges())
    if (is_oblique_neighbor(g, idx, u, e) && is_oblique_neighbor(g, idx, v, e)) return true;
  return false;
}

bool is_pseudoindependent(const Graph& g, const SpanningTree& t, const VertexSet& s) {
  check_vertex_set(g, s);
  const ObliqueIndex idx(t);
  for (const Edge& e : t.edges()) {
    int hits = 0;
    for (Vertex v : s)
      if (is_oblique_neighbor(g, idx, v, e) && ++hits > 1) return false;
  }
  return true;
}

bool oblique_degree_identity(const Graph& g, const SpanningTree& t, Vertex v) {
  check_vertex(g, v);
  const ObliqueIndex idx(t);
  return static_cast<int>(oblique_edges(g, t, idx, v).size()) == g.degree(v);
}

// ---------------------------------------------------------------------------
// Objectives
// ---------------------------------------------------------------------------

std::string to_string(Mode m) { return m == Mode::Leaves ? "leaves" : "rstem"; }

std::string to_string(Outcome o) { return o == Outcome::Achieved ? "Achieved" : "Certified"; }

std::string ObjectiveVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries.size(); ++i) os << (i ? "," : "") << entries[i];
  os << ')';
  return os.str();
}

namespace {

bool has_neighbor_in_stem_except(const Graph& g, const StemReport& r, Vertex v, Vertex except) {
  for (Vertex w : g.neighbors(v))
    if (w != except && r.rstem.contains(w)) return true;
  return false;
}

}  // namespace

std::vector<StemAnchor> select_anchors(const Graph& g, const SpanningTree& t, const StemReport& r) {
  std::vector<StemAnchor> anchors;
  for (Vertex x : r.rstem_leaves) {
    StemAnchor a;
    a.x = x;
    const auto attached = r.paths_at(x);
    a.attached_paths = static_cast<int>(attached.size());
    for (Vertex w : t.neighbors(x))
      if (r.rstem.contains(w)) a.t = w;

    std::vector<const LeafBranchPath*> chosen;
    for (const auto* p : attached)
      if (chosen.size() < 2 && !has_neighbor_in_stem_except(g, r, p->leaf, x)) chosen.push_back(p);
    a.fallback = chosen.size() < 2;
    for (const auto* p : attached)
      if (chosen.size() < 2 && std::find(chosen.begin(), chosen.end(), p) == chosen.end()) chosen.push_back(p);
    std::sort(chosen.begin(), chosen.end(), [](auto* p, auto* q) { return p->leaf < q->leaf; });
    if (!chosen.empty()) {
      a.y = chosen[0]->leaf;
      a.xy = chosen[0]->attach();
    }
    if (chosen.size() > 1) {
      a.z = chosen[1]->leaf;
      a.xz = chosen[1]->attach();
    }
    anchors.push_back(a);
  }
  return anchors;
}

ObjectiveVector leaves_objective(const SpanningTree& t) {
  long leaves = 0;
  for (Vertex v = 0; v < t.order(); ++v)
    if (t.degree(v) == 1) ++leaves;
  return {Mode::Leaves, {leaves}};
}

ObjectiveVector conditions_vector_B(const Graph& g, const SpanningTree& t, const StemReport& r) {
  const auto anchors = select_anchors(g, t, r);
  long deg_sum = 0, path_sum = 0;
  for (const auto& a : anchors) {
    deg_sum += t.degree(a.x);
    if (const auto* p = r.path_of(a.y)) path_sum += static_cast<long>(p->size());
    if (const auto* p = r.path_of(a.z)) path_sum += static_cast<long>(p->size());
  }
  return {Mode::RStem,
          {static_cast<long>(r.rstem_leaves.size()), static_cast<long>(r.rstem.size()),
           static_cast<long>(r.leaves.size()), deg_sum, -path_sum}};
}

ObjectiveVector conditions_vector_B(const Graph& g, const SpanningTree& t, int k) {
  if (k < 2) throw GraphError("reducible-stem objective needs k >= 2");
  return conditions_vector_B(g, t, stem_report(t));
}

// ---------------------------------------------------------------------------
// Candidate generation
// ---------------------------------------------------------------------------

namespace {

Move make_move(std::string rule, std::initializer_list<Edge> remove, std::initializer_list<Edge> add) {
  Move m;
  m.rule = std::move(rule);
  for (const Edge& e : remove) m.remove.push_back(e.canonical());
  for (const Edge& e : add) m.add.push_back(e.canonical());
  return m;
}

// Pushes a move unless it names a missing vertex (-1 placeholders).
void push(std::vector<Move>& out, Move m) {
  auto bad = [](const Edge& e) { return e.u < 0 || e.v < 0 || e.u == e.v; };
  if (std::any_of(m.remove.begin(), m.remove.end(), bad) || std::any_of(m.add.begin(), m.add.end(), bad)) return;
  out.push_back(std::move(m));
}

std::string claw_note(Vertex center, Vertex a, Vertex b, Vertex c) {
  std::ostringstream os;
  os << "claw at " << center << " with leaves {" << a << "," << b << "," << c << "}";
  return os.str();
}

void note(std::vector<std::string>& notes, std::string s) {
  if (std::find(notes.begin(), notes.end(), s) == notes.end()) notes.push_back(std::move(s));
}

// Pseudoadjacent leaf pairs and protected-edge rewires, as moves on `t`.
void leaf_rules(const Graph& g, const SpanningTree& t, const std::string& prefix, CandidateSet& out) {
  if (t.order() < 3) return;
  const auto r = stem_report(t);
  if (r.branches.empty()) return;
  const ObliqueIndex idx(t);
  const auto& leaves = r.leaves.ids();

  for (std::size_t i = 0; i < leaves.size(); ++i) {
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      const Vertex s = leaves[i], tl = leaves[j];
      const auto* ps = r.path_of(s);
      const auto* pt = r.path_of(tl);
      const Edge at_b = Edge{ps->branch, ps->attach()}.canonical();
      const Edge at_u = Edge{pt->branch, pt->attach()}.canonical();
      for (const Edge& e : t.edges()) {
        const Vertex gs = idx.far(e, s), gt = idx.far(e, tl);
        if (gs == s || gt == tl || !g.has_edge(s, gs) || !g.has_edge(tl, gt)) continue;
        if (gs != gt) {
          // e_t = g(e,s) and e_s = g(e,t): reattach both leaves across e.
          const Vertex et = gs, es = gt;
          if (e == at_u) push(out.moves, make_move(prefix + "1.case1", {e}, {{s, et}}));
          else push(out.moves, make_move(prefix + "1.case1", {e, at_u}, {{s, et}, {tl, es}}));
          if (e == at_b) push(out.moves, make_move(prefix + "1.case1", {e}, {{tl, es}}));
          else push(out.moves, make_move(prefix + "1.case1", {e, at_b}, {{s, et}, {tl, es}}));
        } else {
          const Vertex a = gs, z = e.other(a);
          bool resolved = false;
          if (g.has_edge(s, tl)) {
            push(out.moves, make_move(prefix + "1.case2", {at_u}, {{s, tl}}));
            push(out.moves, make_move(prefix + "1.case2", {at_b}, {{s, tl}}));
            resolved = true;
          }
          if (g.has_edge(z, tl)) {
            push(out.moves, make_move(prefix + "1.case2", {e, at_u}, {{z, tl}, {s, a}}));
            resolved = true;
          }
          if (g.has_edge(z, s)) {
            push(out.moves, make_move(prefix + "1.case2", {e, at_b}, {{z, s}, {tl, a}}));
            resolved = true;
          }
          if (!resolved) note(out.obstructions, claw_note(a, z, s, tl));
        }
      }
    }
  }

  for (Vertex b : r.branches) {
    const auto nb = t.neighbors(b);
    std::vector<Vertex> lonely;
    for (Vertex st : nb) {
      std::vector<Vertex> partners;
      for (Vertex si : nb)
        if (si != st && g.has_edge(st, si)) partners.push_back(si);
      if (partners.empty()) {
        lonely.push_back(st);
        continue;
      }
      const Edge e = Edge{b, st}.canonical();
      for (Vertex x : leaves) {
        const Vertex gx = idx.far(e, x);
        if (gx == x || !g.has_edge(x, gx)) continue;
        if (gx == b && x != st) {
          for (Vertex si : partners)
            push(out.moves, make_move(prefix + "2.rewire", {e, {b, si}}, {{b, x}, {st, si}}));
        } else if (gx == b) {
          for (Vertex si : partners) push(out.moves, make_move(prefix + "2.rewire", {{b, si}}, {{st, si}}));
        } else {
          push(out.moves, make_move(prefix + "2.attach", {e}, {{x, st}}));
        }
      }
    }
    if (lonely.size() >= 2) {
      for (Vertex third : nb)
        if (third != lonely[0] && third != lonely[1]) {
          note(out.obstructions, claw_note(b, lonely[0], lonely[1], third));
          break;
        }
    }
  }
}

std::vector<Edge> path_edges(const std::vector<Vertex>& path) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) out.push_back(Edge{path[i], path[i + 1]}.canonical());
  return out;
}

// The tree path from an anchor leaf up to and including x.
std::vector<Vertex> anchor_path(const StemReport& r, Vertex leaf, Vertex x) {
  std::vector<Vertex> out;
  if (const auto* p = r.path_of(leaf)) out = p->vertices;
  out.push_back(x);
  return out;
}

struct StemView {
  const Graph& g;
  const SpanningTree& t;
  const StemReport& r;
  std::vector<StemAnchor> anchors;

  bool rbranch(Vertex v) const { return r.rstem_degree(t, v) >= 3; }

  // Cycle edges of T + {u,v} (as the tree path u..v) that lie in the reducible
  // stem and touch one of its branch vertices.
  std::vector<Edge> stem_cycle_cuts(Vertex u, Vertex v) const {
    std::vector<Edge> out;
    for (const Edge& e : path_edges(path_between(t, u, v)))
      if (r.rstem.contains(e.u) && r.rstem.contains(e.v) && (rbranch(e.u) || rbranch(e.v))) out.push_back(e);
    return out;
  }
};

void rule_b1(const StemView& sv, CandidateSet& out) {
  for (const auto& a : sv.anchors) {
    const auto attached = sv.r.paths_at(a.x);
    const std::size_t m = attached.size();
    if (m < 2) continue;
    std::vector<std::pair<Vertex, Vertex>> reaching;  // (leaf, smallest neighbor in R - {x})
    std::vector<Vertex> attach_of;
    for (const auto* p : attached) {
      for (Vertex w : sv.g.neighbors(p->leaf))
        if (w != a.x && sv.r.rstem.contains(w)) {
          reaching.emplace_back(p->leaf, w);
          attach_of.push_back(p->attach());
          break;
        }
    }
    if (reaching.size() + 1 < m) continue;
    // Re-hang m-1 of the attached paths onto the rest of the stem.
    for (std::size_t skip = 0; skip < reaching.size(); ++skip) {
      if (reaching.size() == m - 1 && skip > 0) break;
      Move mv;
      mv.rule = "B1.rehang";
      for (std::size_t j = 0; j < reaching.size(); ++j) {
        if (reaching.size() == m && j == skip) continue;
        mv.add.push_back(Edge{reaching[j].first, reaching[j].second}.canonical());
        mv.remove.push_back(Edge{a.x, attach_of[j]}.canonical());
      }
      push(out.moves, std::move(mv));
    }
  }
}

void rule_b2(const StemView& sv, CandidateSet& out) {
  const auto& an = sv.anchors;
  for (std::size_t i = 0; i < an.size(); ++i) {
    for (std::size_t j = i + 1; j < an.size(); ++j) {
      std::vector<Vertex> pi = anchor_path(sv.r, an[i].y, an[i].x), pj = anchor_path(sv.r, an[j].y, an[j].x);
      for (Vertex v : anchor_path(sv.r, an[i].z, an[i].x)) pi.push_back(v);
      for (Vertex v : anchor_path(sv.r, an[j].z, an[j].x)) pj.push_back(v);
      std::sort(pi.begin(), pi.end());
      pi.erase(std::unique(pi.begin(), pi.end()), pi.end());
      std::sort(pj.begin(), pj.end());
      pj.erase(std::unique(pj.begin(), pj.end()), pj.end());
      for (Vertex u : pi)
        for (Vertex v : pj) {
          if (!sv.g.has_edge(u, v) || sv.t.has_edge(u, v)) continue;
          for (const Edge& cut : sv.stem_cycle_cuts(u, v)) push(out.moves, make_move("B2.cycle", {cut}, {{u, v}}));
        }
    }
  }
}

void rule_b3(const StemView& sv, CandidateSet& out) {
  // U1 = {y_i, z_i}; an edge u-y_i lets y_i's path hang from u instead of x_i.
  struct Member {
    Vertex leaf, x, attach;
  };
  std::vector<Member> u1;
  for (const auto& a : sv.anchors) {
    if (a.y >= 0) u1.push_back({a.y, a.x, a.xy});
    if (a.z >= 0) u1.push_back({a.z, a.x, a.xz});
  }
  for (const auto& v : u1)
    for (const auto& u : u1)
      if (u.leaf != v.leaf && sv.g.has_edge(u.leaf, v.leaf))
        push(out.moves, make_move("B3.u1_edge", {{v.attach, v.x}}, {{u.leaf, v.leaf}}));
}

void rule_b4(const StemView& sv, CandidateSet& out) {
  const auto& g = sv.g;
  for (const auto& a : sv.anchors) {
    // (leaf adjacent to x, its attach vertex, the other leaf's attach vertex)
    const std::array<std::array<Vertex, 3>, 2> sides{{{a.y, a.xy, a.xz}, {a.z, a.xz, a.xy}}};
    for (const auto& [leaf, own, other] : sides) {
      if (leaf < 0 || other < 0 || !g.has_edge(a.x, leaf)) continue;
      if (g.has_edge(leaf, other)) push(out.moves, make_move("B4.x_edge", {{other, a.x}}, {{leaf, other}}));
      if (a.t < 0) continue;
      bool resolved = false;
      if (g.has_edge(a.t, other)) {
        push(out.moves, make_move("B4.claw", {{other, a.x}}, {{a.t, other}}));
        resolved = true;
      }
      if (g.has_edge(a.t, leaf)) {
        push(out.moves, make_move("B4.claw", {{own, a.x}}, {{a.t, leaf}}));
        resolved = true;
      }
      if (!resolved && !g.has_edge(leaf, other)) note(out.obstructions, claw_note(a.x, a.t, other, leaf));
    }
  }
}

void rule_b5(const StemView& sv, CandidateSet& out) {
  const auto& g = sv.g;
  std::set<Vertex> u1;
  for (const auto& a : sv.anchors) {
    if (a.y >= 0) u1.insert(a.y);
    if (a.z >= 0) u1.insert(a.z);
  }
  for (const auto& p : sv.r.paths) {
    if (u1.count(p.leaf)) continue;
    const auto& verts = p.vertices;  // p first, v_p^- last
    const Vertex vp = p.branch, vpm = p.attach();
    for (std::size_t idx = 0; idx < verts.size(); ++idx) {
      const Vertex x = verts[idx];
      const Vertex xplus = idx + 1 < verts.size() ? verts[idx + 1] : vp;
      for (Vertex u : u1) {
        if (!g.has_edge(x, u)) continue;
        if (x == vpm || x == p.leaf) push(out.moves, make_move("B5.absorb", {{vpm, vp}}, {{x, u}}));
        else push(out.moves, make_move("B5.absorb", {{x, xplus}}, {{x, u}}));
      }
      for (std::size_t i = 0; i < sv.anchors.size(); ++i)
        for (std::size_t j = 0; j < sv.anchors.size(); ++j) {
          const Vertex xi = sv.anchors[i].x, xj = sv.anchors[j].x;
          if (i == j || !g.has_edge(x, xi) || !g.has_edge(x, xj)) continue;
          if (xi == vp) {
            for (const Edge& cut : sv.stem_cycle_cuts(x, xj)) push(out.moves, make_move("B5.cycle", {cut}, {{x, xj}}));
          } else if (i < j || xj == vp) {
            for (const Edge& cut : sv.stem_cycle_cuts(xi, xj))
              push(out.moves, make_move("B5.cycle", {{vp, vpm}, cut}, {{x, xi}, {x, xj}}));
          }
        }
    }
  }
}

// Subclaims on one anchor side: `leaf` plays y_i, `mate` plays z_i.
void rule_b6_to_b10(const StemView& sv, const StemAnchor& a, bool swap, CandidateSet& out) {
  const auto& g = sv.g;
  const Vertex y = swap ? a.z : a.y, z = swap ? a.y : a.z;
  const Vertex xy = swap ? a.xz : a.xy, xz = swap ? a.xy : a.xz;
  const Vertex x = a.x, t = a.t;
  if (y < 0 || z < 0) return;

  // B6: x_iy x_iz must be an edge, else one of them reaches t.
  if (!g.has_edge(xy, xz) && t >= 0 && !swap) {
    bool resolved = false;
    if (g.has_edge(xy, t)) {
      push(out.moves, make_move("B6.triangle", {{x, xy}}, {{xy, t}}));
      resolved = true;
    }
    if (g.has_edge(xz, t)) {
      push(out.moves, make_move("B6.triangle", {{x, xz}}, {{xz, t}}));
      resolved = true;
    }
    if (!resolved) note(out.obstructions, claw_note(x, t, xy, xz));
  }

  const auto path = anchor_path(sv.r, y, x);  // y ... xy, x
  for (std::size_t idx = 1; idx + 1 < path.size(); ++idx) {
    const Vertex v = path[idx], vminus = path[idx - 1];
    if (!g.has_edge(v, y)) continue;
    if (g.has_edge(vminus, z))
      push(out.moves, make_move("B7.cross", {{v, vminus}, {xy, x}}, {{v, y}, {z, vminus}}));
    if (g.has_edge(vminus, x))
      push(out.moves, make_move("B8.triple", {{v, vminus}, {x, xy}, {x, xz}}, {{v, y}, {x, vminus}, {xy, xz}}));
  }
  // The neighbor of y itself: v = y's successor is not in N(y) via a chord,
  // so the scan above starts at index 1.

  if (g.has_edge(xy, z)) push(out.moves, make_move("B9.hop", {{x, xy}}, {{xy, z}}));

  for (std::size_t idx = 0; idx + 2 < path.size(); ++idx) {
    const Vertex v = path[idx], vplus = path[idx + 1];
    if (!g.has_edge(v, z) || !g.has_edge(v, x)) continue;
    if (g.has_edge(vplus, x)) {
      if (vplus == xy) push(out.moves, make_move("B10.x_edge", {{v, vplus}, {x, xz}}, {{xy, xz}, {z, v}}));
      else
        push(out.moves,
             make_move("B10.x_edge", {{v, vplus}, {x, xy}, {x, xz}}, {{vplus, x}, {xy, xz}, {z, v}}));
    }
    if (g.has_edge(vplus, z)) {
      bool resolved = false;
      if (t >= 0 && g.has_edge(v, t)) {
        push(out.moves, make_move("B10.z_edge", {{v, vplus}, {x, xy}}, {{v, t}, {vplus, z}}));
        resolved = true;
      }
      if (t >= 0 && g.has_edge(xz, t)) {
        push(out.moves, make_move("B10.z_edge", {{x, xz}}, {{xz, t}}));
        resolved = true;
      }
      if (g.has_edge(v, xz)) {
        push(out.moves, make_move("B10.z_edge", {{v, vplus}, {x, xz}}, {{v, xz}, {vplus, z}}));
        resolved = true;
      }
      if (!resolved && t >= 0) note(out.obstructions, claw_note(x, t, xz, v));
    }
  }
}

// Leaf rules applied to the reducible stem as a tree of G[V(R)].
void rule_b11(const StemView& sv, CandidateSet& out) {
  if (sv.r.rstem.size() < 4) return;
  const auto sub = induced_subgraph(sv.g, sv.r.rstem);
  std::vector<Edge> inner;
  for (const Edge& e : sv.t.edges())
    if (sv.r.rstem.contains(e.u) && sv.r.rstem.contains(e.v))
      inner.push_back({sub.to_new[static_cast<std::size_t>(e.u)], sub.to_new[static_cast<std::size_t>(e.v)]});
  const auto stem_tree = SpanningTree::from_edges(sub.graph, inner);
  CandidateSet local;
  leaf_rules(sub.graph, stem_tree, "B11.stem_A", local);
  auto lift = [&](const Edge& e) {
    return Edge{sub.to_old[static_cast<std::size_t>(e.u)], sub.to_old[static_cast<std::size_t>(e.v)]}.canonical();
  };
  for (auto& mv : local.moves) {
    for (auto& e : mv.remove) e = lift(e);
    for (auto& e : mv.add) e = lift(e);
    out.moves.push_back(std::move(mv));
  }
}

}  // namespace

CandidateSet catalog_A_candidates(const Graph& g, const SpanningTree& t) {
  CandidateSet out;
  leaf_rules(g, t, "A", out);
  return out;
}

CandidateSet catalog_B_candidates(const Graph& g, const SpanningTree& t) {
  CandidateSet out;
  const auto r = stem_report(t);
  if (r.rstem_leaves.empty()) return out;
  StemView sv{g, t, r, select_anchors(g, t, r)};
  rule_b1(sv, out);
  rule_b2(sv, out);
  rule_b3(sv, out);
  rule_b4(sv, out);
  rule_b5(sv, out);
  for (const auto& a : sv.anchors) {
    rule_b6_to_b10(sv, a, false, out);
    rule_b6_to_b10(sv, a, true, out);
  }
  rule_b11(sv, out);
  return out;
}

std::vector<Move> single_swap_candidates(const Graph& g, const SpanningTree& t) {
  std::vector<Move> out;
  for (const Edge& f : g.edges()) {
    if (t.has_edge(f.u, f.v)) continue;
    for (const Edge& e : path_edges(path_between(t, f.u, f.v))) {
      Move m;
      m.rule = "swap";
      m.remove = {e};
      m.add = {f};
      out.push_back(std::move(m));
    }
  }
  return out;
}

namespace {

template <class Objective>
std::optional<Move> first_improving(const Graph& g, const SpanningTree& t, std::vector<Move>& moves,
                                    const ObjectiveVector& current, Objective&& objective,
                                    std::optional<SpanningTree>* result = nullptr) {
  for (auto& mv : moves) {
    auto next = try_tree_rewrite(g, t, mv.remove, mv.add);
    if (!next) continue;
    auto value = objective(*next);
    if (value < current) {
      mv.objective_after = std::move(value);
      if (result) *result = std::move(next);
      return mv;
    }
  }
  return std::nullopt;
}

ObjectiveVector rstem_objective(const Graph& g, const SpanningTree& t) {
  return conditions_vector_B(g, t, stem_report(t));
}

}  // namespace

std::optional<Move> find_move_catalog_A(const Graph& g, const SpanningTree& t, int l) {
  const auto current = leaves_objective(t);
  if (current.entries[0] <= l) return std::nullopt;
  auto cands = catalog_A_candidates(g, t);
  return first_improving(g, t, cands.moves, current, [](const SpanningTree& s) { return leaves_objective(s); });
}

std::optional<Move> find_move_catalog_B(const Graph& g, const SpanningTree& t, int k) {
  const auto current = conditions_vector_B(g, t, k);
  if (current.entries[0] <= k) return std::nullopt;
  auto cands = catalog_B_candidates(g, t);
  return first_improving(g, t, cands.moves, current, [&](const SpanningTree& s) { return rstem_objective(g, s); });
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

bool Certificate::claims_hold() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimCheck& c) { return c.passed; });
}

const ClaimCheck* Certificate::claim(const std::string& name) const {
  for (const auto& c : claims)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

void fill_common(Certificate& c, const Graph& g, const SpanningTree& t, const StemReport& r) {
  c.n = g.order();
  c.tree_edges.assign(t.edges().begin(), t.edges().end());
  c.leaf_count = static_cast<int>(r.leaves.size());
  c.rstem_leaf_count = static_cast<int>(r.rstem_leaves.size());
  c.claw = find_claw(g);
  c.applicable = !c.claw.has_value();
}

std::string join(const std::vector<Vertex>& vs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
  os << '}';
  return os.str();
}

int count_neighbors_in(const Graph& g, Vertex u, const std::vector<Vertex>& part) {
  int c = 0;
  for (Vertex v : part)
    if (g.has_edge(u, v)) ++c;
  return c;
}

}  // namespace

Certificate certify_leaves(const Graph& g, const SpanningTree& t, int l) {
  if (l < 2) throw GraphError("leaf certificate needs l >= 2");
  if (g.order() < 2) throw GraphError("leaf certificate needs n >= 2");
  Certificate c;
  c.mode = Mode::Leaves;
  c.parameter = l;
  const auto r = stem_report(t);
  fill_common(c, g, t, r);
  const ObliqueIndex idx(t);
  const int n = g.order();

  std::vector<int> hits;
  std::string clash;
  for (const Edge& e : t.edges()) {
    std::vector<Vertex> who;
    for (Vertex x : r.leaves)
      if (is_oblique_neighbor(g, idx, x, e)) who.push_back(x);
    if (who.size() > 1 && clash.empty()) clash = "edge " + to_string(e) + " has oblique leaves " + join(who);
    hits.push_back(static_cast<int>(who.size()));
  }
  const auto edge_hits = [&](const Edge& e) {
    const auto it = std::lower_bound(t.edges().begin(), t.edges().end(), e);
    return hits[static_cast<std::size_t>(it - t.edges().begin())];
  };
  const int leaves = c.leaf_count;
  const int clean = static_cast<int>(std::count(hits.begin(), hits.end(), 0));

  c.claims.push_back({"leaf_count_exceeds_l", leaves >= l + 1, std::to_string(leaves) + " leaves"});
  c.claims.push_back({"leaves_pseudoindependent", clash.empty(), clash});

  std::string per_branch;
  bool branch_ok = true;
  for (Vertex b : r.branches) {
    int protected_edges = 0;
    for (Vertex w : t.neighbors(b))
      if (edge_hits(Edge{b, w}.canonical()) == 0) ++protected_edges;
    if (protected_edges < t.degree(b) - 1) {
      branch_ok = false;
      per_branch += "branch " + std::to_string(b) + ": " + std::to_string(protected_edges) + " < " +
                    std::to_string(t.degree(b) - 1) + "; ";
    }
  }
  c.claims.push_back({"protected_edges_per_branch", branch_ok, per_branch});
  c.claims.push_back({"edges_without_oblique_leaf", clean >= leaves - 1 && clean >= l,
                      std::to_string(clean) + " edges, need >= " + std::to_string(std::max(leaves - 1, l))});
  c.claims.push_back({"leaf_identity", leaf_identity_check(t), ""});

  bool degree_identity = true;
  for (Vertex x : r.leaves)
    if (static_cast<int>(oblique_edges(g, t, idx, x).size()) != g.degree(x)) degree_identity = false;
  c.claims.push_back({"oblique_degree_identity", degree_identity, ""});

  const long leaf_degrees = degree_sum(g, r.leaves);
  c.claims.push_back({"leaf_degree_sum", leaf_degrees <= n - leaves,
                      "deg_G(L) = " + std::to_string(leaf_degrees) + ", n-|L| = " + std::to_string(n - leaves)});

  c.sigma_needed = n - l;
  c.bound = n - 1 - l;
  c.sigma_actual = sigma_p_m(g, l + 1, 2).value;
  c.inequality_holds = c.sigma_actual <= c.bound;
  return c;
}

Certificate certify_rstem(const Graph& g, const SpanningTree& t, int k) {
  if (k < 2) throw GraphError("reducible-stem certificate needs k >= 2");
  Certificate c;
  c.mode = Mode::RStem;
  c.parameter = k;
  const auto r = stem_report(t);
  fill_common(c, g, t, r);
  const auto anchors = select_anchors(g, t, r);
  const int n = g.order();
  const int l = c.rstem_leaf_count;

  c.claims.push_back({"stem_leaf_count_exceeds_k", l >= k + 1, std::to_string(l) + " reducible-stem leaves"});

  bool two_paths = true, avoid = true;
  std::string avoid_detail;
  for (const auto& a : anchors) {
    if (a.attached_paths < 2) two_paths = false;
    if (a.fallback) {
      avoid = false;
      avoid_detail += "x=" + std::to_string(a.x) + " ";
    }
  }
  c.claims.push_back({"stem_leaves_have_two_paths", two_paths, ""});
  c.claims.push_back({"anchor_leaves_avoid_stem", avoid, avoid_detail});

  // Claim: anchor paths of different stem leaves are non-adjacent.
  std::vector<std::vector<Vertex>> reach;
  for (const auto& a : anchors) {
    auto p = anchor_path(r, a.y, a.x);
    for (Vertex v : anchor_path(r, a.z, a.x)) p.push_back(v);
    reach.push_back(std::move(p));
  }
  std::string cross;
  for (std::size_t i = 0; i < reach.size() && cross.empty(); ++i)
    for (std::size_t j = i + 1; j < reach.size() && cross.empty(); ++j)
      for (Vertex u : reach[i])
        for (Vertex v : reach[j])
          if (cross.empty() && g.has_edge(u, v)) cross = to_string(Edge{u, v}.canonical());
  c.claims.push_back({"anchor_paths_nonadjacent", cross.empty(), cross});

  auto independent = [&](const std::vector<Vertex>& s, std::string& detail) {
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (g.has_edge(s[i], s[j])) {
          detail = to_string(Edge{s[i], s[j]}.canonical());
          return false;
        }
    return true;
  };
  std::vector<Vertex> xs(r.rstem_leaves.begin(), r.rstem_leaves.end()), u1, u;
  for (const auto& a : anchors) {
    if (a.y >= 0) u1.push_back(a.y);
    if (a.z >= 0) u1.push_back(a.z);
  }
  u = u1;
  u.insert(u.end(), xs.begin(), xs.end());
  std::string d1, d2, d3;
  c.claims.push_back({"stem_leaves_independent", independent(xs, d1), d1});
  c.claims.push_back({"anchor_leaves_independent", independent(u1, d2), d2});
  c.claims.push_back({"U_independent", independent(u, d3), d3});

  auto path_load = [&](const LeafBranchPath& p) {
    int s = 0;
    for (Vertex w : u) s += count_neighbors_in(g, w, p.vertices);
    return s;
  };
  std::set<Vertex> u1set(u1.begin(), u1.end());
  bool other_ok = true, anchor_ok = true;
  std::string other_detail, anchor_detail;
  for (const auto& p : r.paths) {
    const int load = path_load(p);
    if (load <= static_cast<int>(p.size())) continue;
    const std::string msg = "B_" + std::to_string(p.leaf) + ": " + std::to_string(load) + " > " +
                            std::to_string(p.size()) + "; ";
    if (u1set.count(p.leaf)) {
      anchor_ok = false;
      anchor_detail += msg;
    } else {
      other_ok = false;
      other_detail += msg;
    }
  }
  c.claims.push_back({"other_path_bounds", other_ok, other_detail});
  c.claims.push_back({"anchor_path_bounds", anchor_ok, anchor_detail});

  long stem_load = 0;
  for (Vertex x : xs) stem_load += count_neighbors_in(g, x, r.rstem.ids());
  const long stem_cap = static_cast<long>(r.rstem.size()) - l;
  c.claims.push_back({"stem_neighbor_bound", stem_load <= stem_cap,
                      std::to_string(stem_load) + " vs " + std::to_string(stem_cap)});

  long deg_u = 0;
  for (Vertex w : u) deg_u += g.degree(w);
  c.claims.push_back({"degree_sum_U", deg_u <= n - l,
                      "deg_G(U) = " + std::to_string(deg_u) + ", n-l = " + std::to_string(n - l)});

  c.sigma_needed = n - k;
  c.bound = n - k - 1;
  c.sigma_actual = sigma_p_m(g, 3 * k + 3, 2).value;
  c.inequality_holds = c.sigma_actual <= c.bound;
  return c;
}

// ---------------------------------------------------------------------------
// Optimizers
// ---------------------------------------------------------------------------

SpanningTree initial_tree(const Graph& g, std::optional<std::uint64_t> seed) {
  if (!seed) return dfs_tree(g, 0);
  std::mt19937_64 rng(*seed);
  const int n = g.order();
  const Vertex root = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
  std::vector<std::vector<Vertex>> order(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    auto& o = order[static_cast<std::size_t>(v)];
    o.assign(nb.begin(), nb.end());
    // Fisher-Yates with raw draws keeps the sequence independent of the
    // standard library's distribution implementations.
    for (std::size_t i = o.size(); i > 1; --i) std::swap(o[i - 1], o[rng() % i]);
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edges;
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  seen[static_cast<std::size_t>(root)] = 1;
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    const auto& nb = order[static_cast<std::size_t>(v)];
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
  return SpanningTree::from_edges(g, edges);
}

namespace {

void count_rule(OptimizeResult& res, const std::string& rule) {
  for (auto& [name, count] : res.rule_counts)
    if (name == rule) {
      ++count;
      return;
    }
  res.rule_counts.emplace_back(rule, 1);
}

void check_input(const Graph& g) {
  if (g.order() < 2) throw GraphError("optimizer needs at least 2 vertices");
  if (!is_connected(g)) throw GraphError("graph is not connected");
}

template <class Objective, class Catalog, class Done>
OptimizeResult descend(const Graph& g, const OptimizeOptions& options, Objective&& objective, Catalog&& catalog,
                       Done&& done) {
  OptimizeResult res;
  res.tree = initial_tree(g, options.seed);
  res.objective = objective(res.tree);
  const long n = g.order();
  const long cap = options.max_iters.value_or(std::max(n * n * n, 64L));
  while (!done(res.objective)) {
    auto cands = catalog(res.tree);
    std::optional<SpanningTree> next;
    auto mv = first_improving(g, res.tree, cands.moves, res.objective, objective, &next);
    if (!mv) {
      auto swaps = single_swap_candidates(g, res.tree);
      mv = first_improving(g, res.tree, swaps, res.objective, objective, &next);
    }
    if (!mv) {
      res.obstructions = std::move(cands.obstructions);
      break;
    }
    if (!(*mv->objective_after < res.objective))
      throw SearchError("committed move " + mv->rule + " does not improve " + res.objective.str());
    if (++res.commits > cap)
      throw SearchError("commit cap " + std::to_string(cap) + " exceeded at objective " + res.objective.str());
    count_rule(res, mv->rule);
    res.tree = std::move(*next);
    res.objective = *mv->objective_after;
  }
  return res;
}

}  // namespace

OptimizeResult optimize_leaves(const Graph& g, int l, const OptimizeOptions& options) {
  if (l < 2) throw GraphError("leaf bound l must be >= 2");
  check_input(g);
  auto res = descend(
      g, options, [](const SpanningTree& t) { return leaves_objective(t); },
      [&](const SpanningTree& t) { return catalog_A_candidates(g, t); },
      [&](const ObjectiveVector& o) { return o.entries[0] <= l; });
  if (res.objective.entries[0] <= l) {
    res.outcome = Outcome::Achieved;
  } else {
    res.outcome = Outcome::Certified;
    res.certificate = certify_leaves(g, res.tree, l);
  }
  return res;
}

OptimizeResult optimize_rstem_leaves(const Graph& g, int k, const OptimizeOptions& options) {
  if (k < 2) throw GraphError("reducible-stem bound k must be >= 2");
  check_input(g);
  auto res = descend(
      g, options, [&](const SpanningTree& t) { return rstem_objective(g, t); },
      [&](const SpanningTree& t) { return catalog_B_candidates(g, t); },
      [&](const ObjectiveVector& o) { return o.entries[0] <= k; });
  if (res.objective.entries[0] <= k) {
    res.outcome = Outcome::Achieved;
  } else {
    res.outcome = Outcome::Certified;
    res.certificate = certify_rstem(g, res.tree, k);
  }
  return res;
}

}  // namespace rstem
