#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace crumby {

using Vertex = int;

/// Undirected edge, normalised so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph in adjacency-list form. Neighbour lists keep
/// insertion order; vertices are 0..vertex_count()-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  static Graph from_edges(int vertex_count, std::span<const Edge> edges);
  static Graph from_edges(int vertex_count, std::initializer_list<Edge> edges);

  /// Throws crumby::Error on self-loops, duplicates, or out-of-range indices.
  void add_edge(Vertex a, Vertex b);
  Vertex add_vertex();

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
  bool has_edge(Vertex a, Vertex b) const;
  int max_degree() const;
  bool is_subcubic() const { return max_degree() <= 3; }

  /// All edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  int edge_count_ = 0;
};

enum class Color : std::uint8_t { Red, Blue };

constexpr char to_char(Color c) { return c == Color::Red ? 'r' : 'b'; }
constexpr Color opposite(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }

/// Total vertex -> {Red, Blue} map. Wire form is a lowercase r/b string in
/// vertex order.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(int vertex_count, Color fill = Color::Red)
      : colors_(static_cast<std::size_t>(vertex_count), fill) {}
  explicit Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {}

  /// Accepts r/b in either case; anything else throws crumby::Error.
  static Coloring from_string(std::string_view text);

  int size() const { return static_cast<int>(colors_.size()); }
  Color operator[](Vertex v) const { return colors_[static_cast<std::size_t>(v)]; }
  Color& operator[](Vertex v) { return colors_[static_cast<std::size_t>(v)]; }
  bool is_red(Vertex v) const { return (*this)[v] == Color::Red; }
  bool is_blue(Vertex v) const { return (*this)[v] == Color::Blue; }
  std::span<const Color> colors() const { return colors_; }

  std::string to_string() const;

  bool operator==(const Coloring&) const = default;

 private:
  std::vector<Color> colors_;
};

// Small structural helpers shared by the solvers.

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_bipartite(const Graph& g);
/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
/// Induced subgraph on `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
/// Breadth-first order from `root` over its component.
std::vector<Vertex> bfs_order(const Graph& g, Vertex root);

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_star(int leaves);

}  // namespace crumby
