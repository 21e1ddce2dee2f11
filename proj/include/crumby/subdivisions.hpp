#pragma once

#include <string>

#include "crumby/graph.hpp"
#include "crumby/subdivision.hpp"
#include "crumby/verifier.hpp"

namespace crumby {

/// Colouring of the path P_k whose endpoints are base vertices. `colors`
/// always starts and ends with 'r'; `attainable` says whether it achieves the
/// purpose. Mixed patterns put the red-K2 end first.
struct PathPattern {
  int k = 0;
  PatternPurpose purpose = PatternPurpose::EndpointsInRedK2;
  std::string colors;
  bool attainable = false;
};

/// Rows of fixtures/table1.txt for 3 <= k <= 8 (unattainable cells included, with
/// attainable = false). For k > 8: K2 and mixed prepend "rrb" to the k-3
/// pattern, singleton keeps the first character, inserts "brr" and continues
/// with the rest of the k-3 pattern; if that fails validation, the smallest
/// valid string found by exhaustive search is used. Throws for k < 3.
PathPattern path_pattern(int k, PatternPurpose purpose);

/// Base cubic, every edge subdivided once. Base vertices red, subdivision
/// vertices blue, then the subdivision vertices of a structured maximum
/// matching red; every unsaturated odd component H gets x red with its
/// subdivision vertex towards y red and y blue (x the vertex the matching
/// misses, y its smallest neighbour in H).
Coloring solve_one_subdivision(const SubdividedGraph& sg);

/// Base cubic, every edge subdivided at least twice. Base vertices blue, each
/// edge coloured from a fixed family of internal patterns, then blue stars at
/// base vertices are repaired.
Coloring solve_deep_subdivision(const SubdividedGraph& sg);

/// Base subcubic, every edge subdivided at least once (edges at a degree-1
/// base vertex may have count 0). Base vertices red; edges off the maximum
/// matching and away from the exposed vertices first, then the edges at
/// exposed vertices, then the matching edges with the four single-vertex
/// corrections.
Coloring solve_genuine_subdivision(const SubdividedGraph& sg);

}  // namespace crumby
