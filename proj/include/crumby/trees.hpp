#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "crumby/graph.hpp"
#include "crumby/oracle.hpp"

namespace crumby {

/// State of a vertex relative to its rooted subtree. Red components of a
/// crumby tree colouring are stars, so the states record where a red vertex
/// sits in its star and how much blue degree a blue vertex has used.
///   BFree  blue, no blue child
///   BPair  blue, one blue child; parent must not be blue
///   RPend  red, no red child; parent must be red
///   RCtrK  red, K red children, all RPend
///   RLeaf  red, one red child, which is an RCtr; parent must not be red
enum class TreeState : std::uint8_t { BFree, BPair, RPend, RCtr1, RCtr2, RCtr3, RLeaf };

inline constexpr int kTreeStateCount = 7;

std::string_view to_string(TreeState s);

struct TreeStateTable {
  Vertex root = 0;
  std::vector<Vertex> parent;
  /// Children in increasing vertex order.
  std::vector<std::vector<Vertex>> children;
  /// Number of colourings of v's subtree that realise each state; saturates
  /// at UINT64_MAX.
  std::vector<std::array<std::uint64_t, kTreeStateCount>> count;

  bool feasible(Vertex v, TreeState s) const { return count[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)] > 0; }
  std::vector<TreeState> states(Vertex v) const;
  /// Colourings of the whole tree (sum over the states allowed at a root).
  std::uint64_t total() const;
};

/// Throws crumby::Error if t is not a subcubic tree or p names a non-vertex.
TreeStateTable tree_state_table(const Graph& t, Vertex root, const Prescription& p = {});

/// Exact: Unsat means no crumby colouring of t extends p. Roots at the
/// prescribed vertex when exactly one is given, else at 0. Among solutions
/// prefers a red root, then the smallest state per child.
SolveResult solve_tree(const Graph& t, const Prescription& p = {});

std::uint64_t count_tree_colorings(const Graph& t, const Prescription& p = {});

}  // namespace crumby
