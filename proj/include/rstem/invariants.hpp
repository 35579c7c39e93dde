#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "rstem/graph.hpp"

namespace rstem {

/// Vertices pairwise at distance at least m (vertices in different
/// components count as infinitely far apart).
struct DistanceIndependentSet {
  int m = 2;
  VertexSet members;
};

struct AlphaResult {
  int size = 0;
  DistanceIndependentSet witness;
};

/// Exact alpha^m(G) by branch-and-bound on the conflict graph
/// {uv : d_G(u,v) < m}. Throws for m < 2.
AlphaResult alpha_m(const Graph& g, int m);

/// Minimum degree sum that may be +infinity.
///
/// Infinity compares above every finite value, so `s >= threshold` is true
/// for an infinite sum and any threshold.
class Sigma {
 public:
  static Sigma infinity() { return Sigma(); }
  explicit Sigma(long value) : value_(value) {}

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::logic_error when infinite.
  long value() const;
  std::string str() const { return value_ ? std::to_string(*value_) : "inf"; }

  friend bool operator==(const Sigma&, const Sigma&) = default;
  friend std::strong_ordering operator<=>(const Sigma& a, const Sigma& b);
  friend bool operator==(const Sigma& a, long b) { return a.value_ == b; }
  friend std::strong_ordering operator<=>(const Sigma& a, long b) { return a <=> Sigma(b); }

 private:
  Sigma() = default;
  std::optional<long> value_;
};

struct SigmaResult {
  Sigma value = Sigma::infinity();
  std::optional<VertexSet> witness;  // present iff value is finite
};

/// Exact sigma_p^m(G): the minimum of deg_G(S) over p-sets S pairwise at
/// distance >= m, or +infinity when alpha^m(G) < p. Throws for p < 2 or m < 2.
SigmaResult sigma_p_m(const Graph& g, int p, int m);

struct ClawWitness {
  Vertex center = -1;
  std::array<Vertex, 3> leaves{};
};

/// First induced K_{1,3} in (center, leaves) lexicographic order, if any.
std::optional<ClawWitness> find_claw(const Graph& g);
bool is_claw_free(const Graph& g);

struct StarWitness {
  Vertex center = -1;
  std::vector<Vertex> leaves;
};

/// First induced K_{1,t}; throws for t < 3.
std::optional<StarWitness> find_induced_star(const Graph& g, int t);
bool is_k1t_free(const Graph& g, int t);

/// Re-checks a witness directly against distances / adjacency.
bool verify_distance_independent(const Graph& g, const DistanceIndependentSet& s);
bool verify_claw(const Graph& g, const ClawWitness& w);

}  // namespace rstem
