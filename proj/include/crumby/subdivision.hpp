#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crumby/graph.hpp"

namespace crumby {

/// Where an expanded vertex came from.
struct Provenance {
  enum class Kind : std::uint8_t { Branch, Internal };
  Kind kind = Kind::Branch;
  Vertex base_vertex = -1;  // Branch only
  int edge_index = -1;      // Internal only: index into base_edges()
  int position = 0;         // Internal only: 1..count, counted from the smaller endpoint
};

/// A base graph whose edges are replaced by paths. Expanded vertex ids keep
/// the base ids for branch vertices; internal vertices follow edge by edge in
/// base_edges() order.
class SubdividedGraph {
 public:
  SubdividedGraph() = default;

  const Graph& base() const { return base_; }
  const Graph& expanded() const { return expanded_; }
  const std::vector<Edge>& base_edges() const { return base_edges_; }
  const std::vector<int>& counts() const { return counts_; }
  const std::vector<Provenance>& provenance() const { return provenance_; }

  int count(Edge e) const;
  int edge_index(Edge e) const;
  /// Expanded vertices along base edge `index`: u, internal..., v (u < v).
  std::vector<Vertex> edge_path(int index) const;
  /// Every base edge carries at least one internal vertex.
  bool genuine() const;
  bool all_counts(int value) const;
  int min_count() const;

  friend SubdividedGraph subdivide(const Graph& base, std::span<const int> counts);

 private:
  Graph base_;
  std::vector<Edge> base_edges_;
  std::vector<int> counts_;
  Graph expanded_;
  std::vector<Provenance> provenance_;
  std::vector<Vertex> first_internal_;
};

/// `counts` is aligned with base.edges().
SubdividedGraph subdivide(const Graph& base, std::span<const int> counts);
/// Edges missing from the map get count 0. Throws if a key is not a base edge.
SubdividedGraph subdivide(const Graph& base, const std::map<Edge, int>& counts);
SubdividedGraph subdivide_uniform(const Graph& base, int count);

/// A maximal path between two branch vertices through degree-2 vertices.
/// For loops a == b. `internal` runs from a to b.
struct Thread {
  Vertex a = -1;
  Vertex b = -1;
  std::vector<Vertex> internal;
};

/// Branch vertices and threads of a graph, tolerating multigraph bases
/// (parallel threads and loops).
struct ThreadStructure {
  std::vector<Vertex> branch;
  std::vector<Thread> threads;

  bool simple_base() const;
};

/// Branch vertices are the vertices of degree other than 2. Throws
/// crumby::Error for a graph without branch vertices (path-free cycles).
ThreadStructure branch_threads(const Graph& g);

/// Thread structure of an explicit subdivision (branch = every base vertex).
ThreadStructure thread_structure(const SubdividedGraph& sg);

struct SubdivisionDetection {
  enum class Failure : std::uint8_t { None, NoBranchVertex, NotConnected, NotSubcubic, MultigraphBase };

  Failure failure = Failure::None;
  std::string message;
  /// Set for MultigraphBase: the offending base pair (a == b for a loop).
  std::optional<std::pair<Vertex, Vertex>> offending_pair;
  /// Available whenever the graph has a branch vertex, simple base or not.
  std::optional<ThreadStructure> threads;
  /// Available when the suppressed base is simple.
  std::optional<SubdividedGraph> subdivided;
  /// expanded vertex id of `subdivided` -> vertex id of the input graph.
  std::vector<Vertex> expanded_to_input;

  bool ok() const { return failure == Failure::None; }
};

SubdivisionDetection detect_subdivision_structure(const Graph& g);

}  // namespace crumby
