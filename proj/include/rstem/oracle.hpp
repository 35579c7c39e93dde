#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rstem/graph.hpp"
#include "rstem/invariants.hpp"
#include "rstem/spanning_tree.hpp"

namespace rstem {

// ---------------------------------------------------------------------------
// Spanning-tree enumeration
// ---------------------------------------------------------------------------

inline constexpr std::uint64_t kDefaultTreeCap = 10'000'000;

struct EnumerationSummary {
  std::uint64_t count = 0;
  /// The cap stopped enumeration before every tree was seen.
  bool capped = false;
  /// The visitor asked to stop.
  bool stopped = false;
};

/// Called once per spanning tree with its edges (canonical, ascending).
/// Return false to stop.
using TreeVisitor = std::function<bool(std::span<const Edge>)>;

/// Every spanning tree exactly once, in a fixed order: edge-index
/// backtracking over g.edges() with inclusion tried before exclusion.
/// Throws GraphError for a disconnected graph or n > 64.
EnumerationSummary enumerate_spanning_trees(const Graph& g, const TreeVisitor& visit,
                                            std::uint64_t cap = kDefaultTreeCap);

/// Number of spanning trees by enumeration (stops at cap).
EnumerationSummary count_spanning_trees(const Graph& g, std::uint64_t cap = kDefaultTreeCap);

/// Number of spanning trees by the matrix-tree theorem, with fraction-free
/// integer elimination. Returned in decimal.
std::string matrix_tree_count(const Graph& g);

// ---------------------------------------------------------------------------
// Exact minimization
// ---------------------------------------------------------------------------

enum class TreeObjective { Leaves, StemLeaves, StemBranches, RStemLeaves, RStemBranches };

std::string to_string(TreeObjective o);

/// The objective of one tree, computed from stem_report.
int tree_objective(TreeObjective o, const SpanningTree& t);

struct OracleResult {
  TreeObjective objective = TreeObjective::Leaves;
  int minimum = 0;
  std::optional<SpanningTree> witness;
  std::uint64_t trees_examined = 0;
  /// When true, `minimum` is only an upper bound.
  bool capped = false;
};

/// Exact minimum of `o` over all spanning trees. Enumeration stops early
/// once the trivial lower bound is met (2 leaves for n >= 2, else 0).
OracleResult min_tree(const Graph& g, TreeObjective o, std::uint64_t cap = kDefaultTreeCap);
OracleResult min_leaf_tree(const Graph& g, std::uint64_t cap = kDefaultTreeCap);
OracleResult min_rstem_leaf_tree(const Graph& g, std::uint64_t cap = kDefaultTreeCap);

// ---------------------------------------------------------------------------
// Theorem conformance
// ---------------------------------------------------------------------------

struct TheoremParams {
  std::optional<int> l;
  std::optional<int> k;
  /// Connectivity for the independence-number theorem on m-connected graphs.
  std::optional<int> m;
};

/// One evaluated hypothesis term, e.g. sigma_3 >= 4.
struct HypothesisTerm {
  std::string name;
  Sigma value = Sigma::infinity();
  std::string relation;  // ">=" or "<="
  long threshold = 0;
  bool holds = false;
};

enum class Verdict { Conforms, Vacuous, Violation };

std::string to_string(Verdict v);

struct ConformanceReport {
  std::string theorem;
  TheoremParams params;
  int n = 0;
  bool connected = false;
  std::optional<bool> claw_free;         // present when the theorem needs it
  std::optional<int> vertex_connectivity;  // present when the theorem needs it
  std::vector<HypothesisTerm> terms;     // disjunction; any term suffices
  bool hypothesis_holds = false;
  TreeObjective conclusion_objective = TreeObjective::Leaves;
  int conclusion_bound = 0;
  std::optional<int> oracle_minimum;
  std::optional<bool> conclusion_holds;
  bool capped = false;
  Verdict verdict = Verdict::Vacuous;
};

/// Theorem ids "1.1" .. "1.10".
const std::vector<std::string>& theorem_ids();

/// Evaluates the hypothesis exactly; runs the oracle only when it holds.
/// Throws GraphError for an unknown id or missing/undersized parameters.
ConformanceReport check_theorem(const Graph& g, const std::string& theorem, const TheoremParams& params,
                                std::uint64_t cap = kDefaultTreeCap);

/// Smallest |S| with G - S disconnected or trivial; n - 1 for complete graphs.
int vertex_connectivity(const Graph& g);

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

struct SharpnessExpectation {
  int n = 0;
  long sigma = 0;  // sigma_{3k+3}
  int min_rstem_leaves_lower_claim = 0;
};

/// Vertex layout of the sharpness graph for index i in 0..k.
struct SharpnessBlock {
  Vertex w = -1;
  Vertex x = -1;
  Vertex xy = -1;
  Vertex xz = -1;
  std::vector<Vertex> r;
  std::vector<Vertex> h;
};

struct SharpnessGraph {
  Graph graph;
  int k = 0;
  int m = 0;
  std::vector<SharpnessBlock> blocks;
  SharpnessExpectation expected;
};

/// Complete spine on w_0..w_k; per i a clique R_i joined to x_iy, a clique
/// H_i joined to x_iz, the triangle x_i x_iy x_iz and the spoke x_i w_i.
/// Throws for k < 2 or m < 1, or if the result is not connected and claw-free.
SharpnessGraph gen_sharpness(int k, int m);

/// The tree that runs the spine as a path, hangs each x_i from w_i and
/// walks R_i and H_i as paths from x_iy and x_iz.
SpanningTree sharpness_natural_tree(const SharpnessGraph& s);

/// Seeded G(n, p), repaired by deleting a center-leaf edge of each claw found
/// until claw-free; a disconnected result is redrawn from a derived seed.
/// Throws after a fixed number of redraws.
Graph random_claw_free(int n, double edge_prob, std::uint64_t seed);

/// Seeded connected G(n, p), redrawn from derived seeds until connected.
Graph random_connected(int n, double edge_prob, std::uint64_t seed);

/// Calls `visit` on every labeled graph with n vertices (n <= 8), in order of
/// the edge bitmask over the pairs of g.edges() order.
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& visit);

struct RandomCorpusSpec {
  int count = 0;
  int n_min = 6;
  int n_max = 9;
  std::uint64_t seed = 0;
  double p_min = 0.3;
  double p_max = 0.9;
  bool claw_free = true;
};

/// Graph i uses seed mix_seed(spec.seed + i) and draws its order and edge
/// probability from it.
std::vector<Graph> random_corpus(const RandomCorpusSpec& spec);

/// Uniform double in [0, 1) from 53 raw bits; portable across standard libraries.
double unit_interval(std::uint64_t bits);

/// splitmix64 step, used to derive seeds.
std::uint64_t mix_seed(std::uint64_t x);

}  // namespace rstem
