#pragma once

#include <map>
#include <string>
#include <vector>

#include "crumby/graph.hpp"

namespace crumby {

class Matching {
 public:
  Matching() = default;
  explicit Matching(int vertex_count) : mate_(static_cast<std::size_t>(vertex_count), -1) {}

  void add(Vertex a, Vertex b);
  Vertex mate(Vertex v) const { return mate_[static_cast<std::size_t>(v)]; }
  bool covers(Vertex v) const { return mate(v) >= 0; }
  bool contains(Vertex a, Vertex b) const { return mate(a) == b; }
  int size() const;
  std::vector<Edge> edges() const;
  const std::vector<Vertex>& mates() const { return mate_; }

 private:
  std::vector<Vertex> mate_;
};

/// Pairwise disjoint and every pair is an edge of g.
bool is_matching(const Graph& g, const Matching& m);

/// Edmonds' blossom algorithm, one search per exposed vertex in increasing
/// order.
Matching maximum_matching(const Graph& g);

/// For every vertex x, g - x has a perfect matching (n matching runs).
bool hypomatchable(const Graph& g);

struct OddComponentRole {
  bool saturated = false;
  Vertex matched_from = -1;  // the B vertex, when saturated
  Vertex entry = -1;         // its neighbour inside the component, when saturated
  Vertex exposed = -1;       // the vertex the matching misses, when unsaturated
};

struct EGDecomposition {
  std::vector<Vertex> A, B, C;
  std::vector<std::vector<Vertex>> odd_components;
  std::vector<std::vector<Vertex>> even_components;
  /// Maximum matching with the decomposition's structure: B matched into
  /// distinct odd components, perfect on even components, near-perfect on
  /// odd ones.
  Matching matching;
  /// B vertex -> odd component id.
  std::map<Vertex, int> contracted_matching;
  std::vector<OddComponentRole> roles;
  /// vertex -> odd component id, or -1.
  std::vector<int> odd_component_of;

  std::string to_text() const;
};

/// A (vertices missed by some maximum matching) is read off a multi-root
/// alternating forest grown from every exposed vertex of a maximum matching:
/// the outer vertices. B = N(A), C = the rest. Validates every invariant of
/// the decomposition and throws crumby::InvariantViolation on failure.
EGDecomposition edmonds_gallai(const Graph& g);

/// Matching of B into odd components: each B vertex in increasing order takes
/// the lowest-id component reachable by augmentation; then unsaturated
/// single-vertex components are saturated where an alternating path allows
/// it without uncovering B.
std::map<Vertex, int> hall_matching_onto_B(const Graph& g, const EGDecomposition& d);

/// Throws crumby::InvariantViolation naming the first failed invariant.
void validate_decomposition(const Graph& g, const EGDecomposition& d);

}  // namespace crumby
