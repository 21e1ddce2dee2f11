#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "crumby/graph.hpp"
#include "crumby/subdivision.hpp"

namespace crumby {

/// Two triangles 0-1-2 and 3-4-5 joined by the matching 0-3, 1-4, 2-5.
Graph gen_prism();
Graph gen_petersen();

/// K4 on A=0, B=1, C=2, D=3; counts are for AB, AC, AD, BC, BD, CD, which is
/// also the sorted base edge order.
SubdividedGraph gen_k4_subdivided(const std::array<int, 6>& counts);

/// Uniform attachment: vertex i joins a random earlier vertex of degree < 3.
Graph gen_random_subcubic_tree(int n, std::uint64_t seed);
/// Pairing model with rejection of loops and multi-edges. Throws for odd n or n < 4.
Graph gen_random_cubic(int n, std::uint64_t seed);
/// Random spanning subcubic tree plus random extra edges between vertices of
/// spare degree; `extra` is an upper bound on the extra edges tried.
Graph gen_random_connected_subcubic(int n, int extra, std::uint64_t seed);

/// 2-connected subcubic outerplanar graph grown face by face: the first face
/// is a polygon of face_sizes[0] vertices, each later face is glued along a
/// random outer edge whose endpoints both still have degree 2. Vertices are
/// numbered along the outer cycle. Throws if no such edge remains.
Graph gen_fan_outerplanar(const std::vector<int>& face_sizes, std::uint64_t seed);
/// Keeps adding random faces (sizes 3..max_face) until `target` vertices are
/// reached or no outer edge can take another face.
Graph gen_random_outerplanar(int target, int max_face, std::uint64_t seed);

/// A tree hung on a cycle vertex by identifying `leaf` with that vertex.
struct Attachment {
  Graph tree;
  Vertex leaf = 0;

  static Attachment k2();
  static Attachment k13();
  static Attachment path(int n);
};

/// Cycle 0..k-1 followed by the non-leaf vertices of each attachment, in
/// position order.
Graph gen_cycle_with_trees(int k, const std::map<int, Attachment>& attachments);

/// Every isomorphism class of subcubic trees on n vertices exactly once, in
/// order of their canonical strings.
std::vector<Graph> enumerate_trees(int n);

/// Every connected cubic graph on n vertices up to isomorphism, grown from K4
/// by edge insertion (subdivide two distinct edges and join the new
/// vertices), triangle expansion, diamond insertion and bridge joins of two
/// smaller graphs. Deduplicated by canonical form; checked against the known
/// counts up to n = 14.
std::vector<Graph> enumerate_connected_cubic(int n);

/// Every connected bipartite subcubic graph on n vertices up to isomorphism,
/// grown by adding one vertex at a time.
std::vector<Graph> enumerate_connected_bipartite_subcubic(int n);

}  // namespace crumby
