#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crumby/graph.hpp"

namespace crumby {

struct OuterplanarEmbedding {
  /// The Hamiltonian outer cycle, starting at vertex 0.
  std::vector<Vertex> outer_cycle;
  std::vector<Edge> chords;
  /// Each inner face as a cyclic vertex list.
  std::vector<std::vector<Vertex>> inner_faces;
  /// Faces sharing a chord; dual_tree[f] lists (neighbour face, chord).
  std::vector<std::vector<std::pair<int, Edge>>> dual_tree;
};

struct OuterplanarRecognition {
  enum class Failure : std::uint8_t { None, NotConnected, NotTwoConnected, NotOuterplanar, NotSubcubic };

  Failure failure = Failure::None;
  std::string message;
  /// NotOuterplanar: vertices of a K4 or K_{2,3} subdivision. NotTwoConnected:
  /// a cut vertex.
  std::vector<Vertex> witness;
  std::optional<OuterplanarEmbedding> embedding;

  bool ok() const { return failure == Failure::None; }
};

/// Succeeds exactly for 2-connected outerplanar graphs (n >= 3). Planarity of
/// g plus an apex vertex decides outerplanarity; the rotation at the apex
/// gives the outer cycle. Subcubic is not required here.
OuterplanarRecognition embed_outerplanar(const Graph& g);

/// Outerplanar in the general sense (every block outerplanar).
bool is_outerplanar(const Graph& g);
bool is_two_connected(const Graph& g);

struct Ear {
  Vertex x = -1;
  Vertex y = -1;
  /// z_1..z_l from x to y.
  std::vector<Vertex> internal;
  int face = -1;
};

struct EarDecomposition {
  std::vector<Vertex> initial;
  int initial_face = -1;
  std::vector<Ear> ears;
};

/// G_0 is a face containing v; when v has degree 3 the first ear is the
/// other face at v, with v as its y end. Later ears follow a breadth-first
/// walk of the dual tree from G_0, neighbours in face index order.
EarDecomposition ear_decomposition(const OuterplanarEmbedding& e, Vertex v);

/// Ear-by-ear crumby colouring of a 2-connected subcubic outerplanar graph
/// with v prescribed. Throws crumby::Error if g is not such a graph and
/// InvariantViolation (naming the ear and the partial colouring) if a step
/// leaves the processed part non-crumby or two blue ends on a pending chord.
Coloring solve_outerplanar_2conn(const Graph& g, Vertex v, Color color);

/// A cycle with vertex-disjoint subcubic trees, each hung on a distinct cycle
/// vertex by one of its leaves. `cycle` lists the cycle in order; `tree_of`
/// gives, per cycle vertex, the tree vertices (cycle vertex excluded).
struct CycleWithTrees {
  std::vector<Vertex> cycle;
  std::vector<std::vector<Vertex>> tree_of;
};

/// Throws crumby::Error unless g is connected, subcubic and has exactly one
/// cycle.
CycleWithTrees cycle_with_trees_structure(const Graph& g);

Coloring solve_cycle_with_trees(const Graph& g);

/// g with t glued on by identifying `leaf` with `at`. The other vertices of
/// t follow g's in increasing order.
Graph attach_graph(const Graph& g, const Graph& t, Vertex leaf, Vertex at);

/// Extends a crumby colouring of g to attach_graph(g, t, leaf, at): the
/// neighbour of `leaf` gets the colour opposite to `at`, and the rest of t
/// comes from the tree solver. Throws crumby::Error when t is K2 or K_{1,3}
/// hung by a leaf, or leaf is not a leaf.
Coloring attach_tree(const Graph& g, const Coloring& coloring, const Graph& t, Vertex leaf, Vertex at);

}  // namespace crumby
