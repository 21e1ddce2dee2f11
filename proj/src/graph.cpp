#include "crumby/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "crumby/error.hpp"

namespace crumby {

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) throw Error("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(vertex_count));
}

Graph Graph::from_edges(int vertex_count, std::span<const Edge> edges) {
  Graph g(vertex_count);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

Graph Graph::from_edges(int vertex_count, std::initializer_list<Edge> edges) {
  return from_edges(vertex_count, std::span<const Edge>(edges.begin(), edges.size()));
}

void Graph::add_edge(Vertex a, Vertex b) {
  const int n = vertex_count();
  if (a < 0 || b < 0 || a >= n || b >= n) {
    throw Error("edge " + std::to_string(a) + "-" + std::to_string(b) + " out of range for " +
                std::to_string(n) + " vertices");
  }
  if (a == b) throw Error("self-loop at vertex " + std::to_string(a));
  if (has_edge(a, b)) throw Error("duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
  adjacency_[static_cast<std::size_t>(a)].push_back(b);
  adjacency_[static_cast<std::size_t>(b)].push_back(a);
  ++edge_count_;
}

Vertex Graph::add_vertex() {
  adjacency_.emplace_back();
  return vertex_count() - 1;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count()) return false;
  const auto& adj = adjacency_[static_cast<std::size_t>(a)];
  return std::find(adj.begin(), adj.end(), b) != adj.end();
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& adj : adjacency_) best = std::max(best, static_cast<int>(adj.size()));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex v = 0; v < vertex_count(); ++v) {
    for (Vertex w : neighbors(v)) {
      if (v < w) out.emplace_back(v, w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return vertex_count() == other.vertex_count() && edges() == other.edges();
}

Coloring Coloring::from_string(std::string_view text) {
  std::vector<Color> colors;
  colors.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'r':
      case 'R':
        colors.push_back(Color::Red);
        break;
      case 'b':
      case 'B':
        colors.push_back(Color::Blue);
        break;
      default:
        throw Error(std::string("invalid color character '") + ch + "'");
    }
  }
  return Coloring(std::move(colors));
}

std::string Coloring::to_string() const {
  std::string out;
  out.reserve(colors_.size());
  for (Color c : colors_) out.push_back(to_char(c));
  return out;
}

std::vector<Vertex> bfs_order(const Graph& g, Vertex root) {
  std::vector<Vertex> order;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::deque<Vertex> queue{root};
  seen[static_cast<std::size_t>(root)] = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  return order;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    auto comp = bfs_order(g, v);
    for (Vertex w : comp) seen[static_cast<std::size_t>(w)] = 1;
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return g.vertex_count() == 0 || static_cast<int>(bfs_order(g, 0).size()) == g.vertex_count();
}

bool is_tree(const Graph& g) {
  return g.vertex_count() > 0 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        auto& sw = side[static_cast<std::size_t>(w)];
        if (sw < 0) {
          sw = 1 - side[static_cast<std::size_t>(v)];
          queue.push_back(w);
        } else if (sw == side[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  Graph h(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      int j = index[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) h.add_edge(static_cast<int>(i), j);
    }
  }
  return h;
}

Graph make_path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_cycle(int n) {
  if (n < 3) throw Error("cycle needs at least 3 vertices");
  Graph g = make_path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph make_complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph make_star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

}  // namespace crumby
