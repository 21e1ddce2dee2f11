#pragma once

#include <string>
#include <vector>

#include "crumby/graph.hpp"

namespace crumby {

/// Canonical labelling by colour refinement plus exhaustive individualisation
/// (no automorphism pruning). Exponential in the worst case; intended for the
/// small graphs the generators and tests enumerate (n <= ~20).
/// Returns the relabelling: canonical position -> original vertex.
std::vector<Vertex> canonical_labeling(const Graph& g);

/// graph6 string of the canonically relabelled graph. Two graphs are
/// isomorphic iff their canonical forms are equal.
std::string canonical_form(const Graph& g);

/// Relabels `g` so that new vertex i is old vertex order[i].
Graph permute(const Graph& g, const std::vector<Vertex>& order);

}  // namespace crumby
