#pragma once

#include <optional>
#include <string_view>

#include "crumby/graph.hpp"
#include "crumby/oracle.hpp"

namespace crumby {

/// Dispatch tags, in detection priority order.
enum class GraphClass : std::uint8_t {
  Tree,
  K4Subdivision,
  OneSubdivisionOfCubic,
  DeepSubdivision,
  GenuineSubdivision,
  TwoConnectedOuterplanar,
  CycleWithTrees,
  Unknown,
};

/// CLI names: tree, k4sub, one-subdivision, deep-subdivision,
/// genuine-subdivision, outerplanar, cycle-with-trees, unknown.
std::string_view to_string(GraphClass c);
std::optional<GraphClass> parse_graph_class(std::string_view name);

/// Whether g has the structure the class's solver needs. Unknown always holds.
bool in_class(const Graph& g, GraphClass c);

/// The first class g belongs to in priority order. A hint replaces detection
/// when g is in that class; otherwise crumby::Error.
GraphClass classify(const Graph& g, std::optional<GraphClass> hint = std::nullopt);

/// Runs the constructive solver for the class. Trees take any prescription;
/// 2-connected outerplanar graphs take at most one prescribed vertex (vertex 0
/// red by default); other classes reject a prescription their colouring does
/// not happen to meet. Unknown throws crumby::Error. The colouring is not
/// re-verified here.
SolveResult solve_in_class(const Graph& g, GraphClass c, const Prescription& p = {});

}  // namespace crumby
