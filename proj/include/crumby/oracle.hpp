#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crumby/graph.hpp"

namespace crumby {

/// Partial vertex -> colour map the answer must extend.
struct Prescription {
  std::map<Vertex, Color> fixed;

  Prescription() = default;
  Prescription(std::initializer_list<std::pair<const Vertex, Color>> init) : fixed(init) {}

  bool allows(Vertex v, Color c) const;
  bool satisfied_by(const Coloring& c) const;
  /// Throws crumby::Error if a key is not a vertex of a graph on n vertices.
  void check(int n) const;
};

enum class SolveStatus : std::uint8_t { Sat, Unsat, BudgetExceeded };

std::string_view to_string(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::Unsat;
  std::optional<Coloring> coloring;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Default node budget: CRUMBY_BUDGET from the environment if set, else 10^8.
std::uint64_t default_budget();

/// Backtracking over vertices in breadth-first order from vertex 0 (then the
/// next unvisited vertex), Red before Blue. Prunes on a blue vertex with two
/// blue neighbours, a red vertex whose neighbours are all decided and blue, a
/// decided red P4, and skips Blue for a vertex that is the last undecided
/// neighbour of a red vertex still lacking a red neighbour. One node is one
/// colour assignment.
SolveResult solve_exact(const Graph& g, const Prescription& p = {}, std::uint64_t budget = default_budget());

/// Calls `visit` for every crumby colouring extending p, in search order;
/// stops early when `visit` returns false. Returns the node count.
std::uint64_t for_each_coloring(const Graph& g, const Prescription& p,
                                const std::function<bool(const Coloring&)>& visit);

std::uint64_t count_colorings(const Graph& g, const Prescription& p = {});
std::vector<Coloring> solve_exact_all(const Graph& g, const Prescription& p = {});

}  // namespace crumby
