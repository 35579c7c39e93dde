#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rstem/graph.hpp"
#include "rstem/invariants.hpp"
#include "rstem/spanning_tree.hpp"

namespace rstem {

// ---------------------------------------------------------------------------
// Oblique neighbors and pseudoadjacency
// ---------------------------------------------------------------------------

/// O(1) near/far endpoint queries for tree edges, from an Euler tour of the
/// tree rooted at vertex 0.
///
/// For a tree edge e and a vertex v, near(e, v) is the endpoint of e closer
/// to v in the tree (e_v) and far(e, v) the other endpoint (g(e, v)).
class ObliqueIndex {
 public:
  explicit ObliqueIndex(const SpanningTree& t);

  Vertex near(const Edge& e, Vertex v) const;
  Vertex far(const Edge& e, Vertex v) const;
  /// The neighbor of u on the tree path from u to v (u != v).
  Vertex toward(Vertex u, Vertex v) const;
  /// v lies in the subtree of `top` (tree rooted at vertex 0).
  bool below(Vertex top, Vertex v) const;

 private:
  const SpanningTree* tree_;
  std::vector<Vertex> parent_;
  std::vector<int> tin_;
  std::vector<int> tout_;
};

/// v * g(e, v) is an edge of the host.
bool is_oblique_neighbor(const Graph& g, const ObliqueIndex& idx, Vertex v, const Edge& e);
bool is_oblique_neighbor(const Graph& g, const SpanningTree& t, Vertex v, const Edge& e);

/// Tree edges having v as an oblique neighbor.
std::vector<Edge> oblique_edges(const Graph& g, const SpanningTree& t, const ObliqueIndex& idx, Vertex v);

/// Some tree edge has both u and v as oblique neighbors (u != v).
bool are_pseudoadjacent(const Graph& g, const SpanningTree& t, Vertex u, Vertex v);
/// No two members of s are pseudoadjacent.
bool is_pseudoindependent(const Graph& g, const SpanningTree& t, const VertexSet& s);

/// The number of tree edges with v as an oblique neighbor equals deg_G(v).
bool oblique_degree_identity(const Graph& g, const SpanningTree& t, Vertex v);

// ---------------------------------------------------------------------------
// Objectives
// ---------------------------------------------------------------------------

enum class Mode { Leaves, RStem };

std::string to_string(Mode m);

/// Lexicographically minimized objective.
///
/// Leaves mode: (|L(T)|).
/// RStem mode: (|L(R)|, |R|, |L(T)|, sum deg_T(x_i), -sum(|B_y_i| + |B_z_i|)),
/// R being the reducible stem and x_i its leaves.
struct ObjectiveVector {
  Mode mode = Mode::Leaves;
  std::vector<long> entries;

  friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
  friend bool operator<(const ObjectiveVector& a, const ObjectiveVector& b) { return a.entries < b.entries; }
  std::string str() const;
};

/// Per reducible-stem leaf x_i: the two leaves y_i, z_i whose leaf-branch
/// paths attach at x_i, the path vertices x_iy, x_iz adjacent to x_i, and
/// t, the neighbor of x_i inside the reducible stem.
struct StemAnchor {
  Vertex x = -1;
  Vertex y = -1;
  Vertex z = -1;
  Vertex xy = -1;
  Vertex xz = -1;
  Vertex t = -1;
  int attached_paths = 0;
  /// Fewer than two attached leaves avoid R - {x}; y/z then fall back to the
  /// smallest ids.
  bool fallback = false;
};

/// Anchors for every leaf of the reducible stem, ascending by x.
///
/// Among leaves attached at x_i, those without a host neighbor in R - {x_i}
/// are preferred; ties go to the smaller id.
std::vector<StemAnchor> select_anchors(const Graph& g, const SpanningTree& t, const StemReport& r);

ObjectiveVector leaves_objective(const SpanningTree& t);
ObjectiveVector conditions_vector_B(const Graph& g, const SpanningTree& t, int k);
ObjectiveVector conditions_vector_B(const Graph& g, const SpanningTree& t, const StemReport& r);

// ---------------------------------------------------------------------------
// Moves
// ---------------------------------------------------------------------------

/// An edge exchange T - remove + add, tagged with the rule that produced it.
struct Move {
  std::vector<Edge> remove;
  std::vector<Edge> add;
  std::string rule;
  /// Filled in once the move has been evaluated against the active objective.
  std::optional<ObjectiveVector> objective_after;
};

/// Candidate moves of one catalog, in rule order, with the claw obstructions
/// met while generating them (a rule needed a chord that is absent).
struct CandidateSet {
  std::vector<Move> moves;
  std::vector<std::string> obstructions;
};

/// Leaf-reducing exchanges: pseudoadjacent leaf pairs (Cases 1 and 2) and
/// oblique leaves on protected edges at branch vertices.
CandidateSet catalog_A_candidates(const Graph& g, const SpanningTree& t);

/// Reducible-stem exchanges, rules B1..B11 in order.
CandidateSet catalog_B_candidates(const Graph& g, const SpanningTree& t);

/// Every single swap: add a non-tree edge f, drop an edge of the cycle f closes.
std::vector<Move> single_swap_candidates(const Graph& g, const SpanningTree& t);

/// First catalog-A candidate that strictly lowers |L(T)|, or none. Only
/// searches when |L(T)| > l.
std::optional<Move> find_move_catalog_A(const Graph& g, const SpanningTree& t, int l);

/// First catalog-B candidate that strictly lowers the RStem objective, or
/// none. Only searches when |L(R_Stem(T))| > k.
std::optional<Move> find_move_catalog_B(const Graph& g, const SpanningTree& t, int k);

// ---------------------------------------------------------------------------
// Certificates and optimizers
// ---------------------------------------------------------------------------

struct ClaimCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Degree-sum certificate recomputed at a local optimum.
///
/// `bound` is n-1-l (Leaves) or n-k-1 (RStem); `sigma_needed` is the
/// hypothesis threshold n-l or n-k; `sigma_actual` is sigma_{l+1}(G) or
/// sigma_{3k+3}(G). When the host is not claw-free, `applicable` is false
/// and `claw` holds the witness.
struct Certificate {
  Mode mode = Mode::Leaves;
  int n = 0;
  int parameter = 0;
  std::vector<Edge> tree_edges;
  int leaf_count = 0;
  int rstem_leaf_count = 0;
  std::vector<ClaimCheck> claims;
  long sigma_needed = 0;
  Sigma sigma_actual = Sigma::infinity();
  long bound = 0;
  std::string inequality_direction = "<=";
  bool inequality_holds = false;
  bool applicable = true;
  std::optional<ClawWitness> claw;

  bool claims_hold() const;
  const ClaimCheck* claim(const std::string& name) const;
};

/// Claim suite for leaf minimization at tree t, plus sigma_{l+1} <= n-1-l.
Certificate certify_leaves(const Graph& g, const SpanningTree& t, int l);
/// Claim suite for reducible-stem minimization at tree t, plus
/// sigma_{3k+3} <= n-k-1.
Certificate certify_rstem(const Graph& g, const SpanningTree& t, int k);

enum class Outcome { Achieved, Certified };

std::string to_string(Outcome o);

struct OptimizeOptions {
  /// No seed: DFS tree from vertex 0 with ascending neighbors. With a seed:
  /// randomized DFS (random root, shuffled neighbor order).
  std::optional<std::uint64_t> seed;
  /// Commit cap; defaults to max(n^3, 64).
  std::optional<long> max_iters;
};

struct OptimizeResult {
  SpanningTree tree;
  Outcome outcome = Outcome::Achieved;
  ObjectiveVector objective;
  std::optional<Certificate> certificate;
  long commits = 0;
  /// rule id -> number of commits it produced, in first-use order.
  std::vector<std::pair<std::string, long>> rule_counts;
  std::vector<std::string> obstructions;
};

/// Thrown when the commit cap is exceeded or a committed move fails to
/// improve; both indicate an internal defect.
class SearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SpanningTree initial_tree(const Graph& g, std::optional<std::uint64_t> seed);

OptimizeResult optimize_leaves(const Graph& g, int l, const OptimizeOptions& options = {});
OptimizeResult optimize_rstem_leaves(const Graph& g, int k, const OptimizeOptions& options = {});

}  // namespace rstem
