#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "crumby/graph.hpp"

namespace crumby {

/// Internal vertex counts on AB, AC, AD, BC, BD, CD; colourings are in
/// gen_k4_subdivided order.
using K4Counts = std::array<int, 6>;

/// Counts in {0, 1, 2}: the frozen base colouring, or the oracle if the
/// fixture lacks the vector. Unsat is an InvariantViolation.
Coloring solve_k4_base(const K4Counts& counts);

/// What the expansion did beyond the primary insertion rules.
struct K4ExpansionLog {
  int insertions = 0;
  /// One line per insertion where the primary rule failed verification and
  /// the position/pattern search was used.
  std::vector<std::string> fallbacks;
};

/// Reduces every count mod 3, colours the base, then puts back the removed
/// vertices three at a time: "brr" next to the red end of a red-blue pair,
/// "rbr" between two reds on an all-red edge, "rrr" between two blue ends.
/// Every insertion is verified; a failing one is replaced by the first
/// verified choice over all positions on the edge and the patterns brr, rrb,
/// rbr, rrr. Throws InvariantViolation if nothing verifies.
Coloring solve_k4_subdivision(const K4Counts& counts, K4ExpansionLog* log = nullptr);

/// Four branch vertices of a subdivided K4 inside g, found by backtracking
/// over six internally disjoint paths. For subcubic graphs this decides
/// K4-minor containment; branch vertices must have degree 3.
std::optional<std::array<Vertex, 4>> find_k4_subdivision(const Graph& g);
bool k4_minor_free_subcubic(const Graph& g);

}  // namespace crumby
