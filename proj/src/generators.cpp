#include "crumby/generators.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "crumby/canonical.hpp"
#include "crumby/error.hpp"

namespace crumby {

Graph gen_prism() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph gen_petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

SubdividedGraph gen_k4_subdivided(const std::array<int, 6>& counts) {
  return subdivide(make_complete(4), std::span<const int>(counts.data(), counts.size()));
}

Graph gen_random_subcubic_tree(int n, std::uint64_t seed) {
  if (n < 1) throw Error("tree needs n >= 1");
  std::mt19937_64 rng(seed);
  Graph g(n);
  std::vector<Vertex> open{0};
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    const std::size_t i = pick(rng);
    const Vertex parent = open[i];
    g.add_edge(parent, v);
    if (g.degree(parent) == 3) {
      open[i] = open.back();
      open.pop_back();
    }
    open.push_back(v);
  }
  return g;
}

Graph gen_random_cubic(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) throw Error("cubic graph needs even n >= 4");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> points;
  for (Vertex v = 0; v < n; ++v) points.insert(points.end(), 3, v);
  while (true) {
    std::shuffle(points.begin(), points.end(), rng);
    std::set<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      simple = points[i] != points[i + 1] && edges.insert(Edge(points[i], points[i + 1])).second;
    }
    if (!simple) continue;
    std::vector<Edge> list(edges.begin(), edges.end());
    return Graph::from_edges(n, list);
  }
}

Graph gen_random_connected_subcubic(int n, int extra, std::uint64_t seed) {
  Graph g = gen_random_subcubic_tree(n, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  for (int i = 0; i < extra; ++i) {
    const Vertex a = pick(rng);
    const Vertex b = pick(rng);
    if (a == b || g.has_edge(a, b) || g.degree(a) >= 3 || g.degree(b) >= 3) continue;
    g.add_edge(a, b);
  }
  return g;
}

namespace {

struct OuterplanarBuilder {
  std::vector<Vertex> cycle;
  std::vector<Edge> edges;
  std::vector<int> degree;
  int next = 0;

  void start(int size) {
    for (int i = 0; i < size; ++i) {
      cycle.push_back(next++);
      degree.push_back(2);
    }
    for (int i = 0; i < size; ++i) edges.emplace_back(cycle[static_cast<std::size_t>(i)], cycle[static_cast<std::size_t>((i + 1) % size)]);
  }

  std::vector<std::size_t> open_edges() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Vertex a = cycle[i];
      const Vertex b = cycle[(i + 1) % cycle.size()];
      if (degree[static_cast<std::size_t>(a)] == 2 && degree[static_cast<std::size_t>(b)] == 2) out.push_back(i);
    }
    return out;
  }

  void glue(std::size_t at, int size) {
    const Vertex a = cycle[at];
    const Vertex b = cycle[(at + 1) % cycle.size()];
    std::vector<Vertex> fresh;
    for (int i = 0; i < size - 2; ++i) {
      fresh.push_back(next++);
      degree.push_back(2);
    }
    ++degree[static_cast<std::size_t>(a)];
    ++degree[static_cast<std::size_t>(b)];
    Vertex prev = a;
    for (Vertex f : fresh) {
      edges.emplace_back(prev, f);
      prev = f;
    }
    edges.emplace_back(prev, b);
    cycle.insert(cycle.begin() + static_cast<std::ptrdiff_t>(at + 1), fresh.begin(), fresh.end());
  }

  Graph finish() const {
    std::vector<Vertex> position(cycle.size());
    for (std::size_t i = 0; i < cycle.size(); ++i) position[static_cast<std::size_t>(cycle[i])] = static_cast<Vertex>(i);
    Graph g(static_cast<int>(cycle.size()));
    for (const Edge& e : edges) g.add_edge(position[static_cast<std::size_t>(e.u)], position[static_cast<std::size_t>(e.v)]);
    return g;
  }
};

}  // namespace

Graph gen_fan_outerplanar(const std::vector<int>& face_sizes, std::uint64_t seed) {
  if (face_sizes.empty()) throw Error("outerplanar generator needs at least one face");
  for (int s : face_sizes) {
    if (s < 3) throw Error("face sizes must be >= 3");
  }
  std::mt19937_64 rng(seed);
  OuterplanarBuilder b;
  b.start(face_sizes[0]);
  for (std::size_t f = 1; f < face_sizes.size(); ++f) {
    auto open = b.open_edges();
    if (open.empty()) throw Error("no outer edge can take face " + std::to_string(f));
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    b.glue(open[pick(rng)], face_sizes[f]);
  }
  return b.finish();
}

Graph gen_random_outerplanar(int target, int max_face, std::uint64_t seed) {
  if (target < 3 || max_face < 3) throw Error("outerplanar generator needs target >= 3 and max_face >= 3");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(3, max_face);
  OuterplanarBuilder b;
  b.start(std::min(target, size(rng)));
  while (static_cast<int>(b.cycle.size()) < target) {
    auto open = b.open_edges();
    if (open.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    const int room = target - static_cast<int>(b.cycle.size());
    b.glue(open[pick(rng)], std::min(size(rng), room + 2));
  }
  return b.finish();
}

Attachment Attachment::k2() { return {make_path(2), 0}; }
Attachment Attachment::k13() { return {make_star(3), 1}; }
Attachment Attachment::path(int n) { return {make_path(n), 0}; }

Graph gen_cycle_with_trees(int k, const std::map<int, Attachment>& attachments) {
  if (k < 3) throw Error("cycle needs k >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  int next = k;
  for (const auto& [pos, att] : attachments) {
    if (pos < 0 || pos >= k) throw Error("attachment position out of range");
    if (!is_tree(att.tree) || !att.tree.is_subcubic()) throw Error("attachment must be a subcubic tree");
    if (att.tree.degree(att.leaf) != 1) throw Error("attachment must hang from a leaf");
    std::vector<Vertex> id(static_cast<std::size_t>(att.tree.vertex_count()));
    for (Vertex v = 0; v < att.tree.vertex_count(); ++v) id[static_cast<std::size_t>(v)] = v == att.leaf ? pos : next++;
    for (const Edge& e : att.tree.edges()) edges.emplace_back(id[static_cast<std::size_t>(e.u)], id[static_cast<std::size_t>(e.v)]);
  }
  return Graph::from_edges(next, edges);
}

namespace {

std::string rooted_code(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> children;
  for (Vertex w : t.neighbors(v)) {
    if (w != parent) children.push_back(rooted_code(t, w, v));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  return out + ")";
}

// Minimum over the centres of the centre-rooted AHU string.
std::string tree_code(const Graph& t) {
  const int n = t.vertex_count();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = t.degree(v);
    if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : t.neighbors(v)) {
        if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (Vertex c : layer) {
    std::string code = rooted_code(t, c, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1) throw Error("enumerate_trees needs n >= 1");
  std::map<std::string, Graph> level{{"()", Graph(1)}};
  for (int m = 2; m <= n; ++m) {
    std::map<std::string, Graph> next;
    for (const auto& [code, t] : level) {
      for (Vertex v = 0; v < t.vertex_count(); ++v) {
        if (t.degree(v) >= 3) continue;
        Graph grown = t;
        const Vertex leaf = grown.add_vertex();
        grown.add_edge(v, leaf);
        next.emplace(tree_code(grown), std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [code, t] : level) out.push_back(std::move(t));
  return out;
}

namespace {

// Grow a cubic graph by two vertices: subdivide edges i and j and join the
// two new vertices.
Graph insert_edge(const Graph& g, std::size_t i, std::size_t j) {
  const auto edges = g.edges();
  const Vertex x = g.vertex_count();
  const Vertex y = x + 1;
  std::vector<Edge> list;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (e != i && e != j) list.push_back(edges[e]);
  }
  list.insert(list.end(), {{edges[i].u, x}, {x, edges[i].v}, {edges[j].u, y}, {y, edges[j].v}, {x, y}});
  return Graph::from_edges(x + 2, list);
}

// Replace vertex v by a triangle.
Graph expand_triangle(const Graph& g, Vertex v) {
  const auto nbrs = g.neighbors(v);
  const Vertex t[3] = {v, g.vertex_count(), g.vertex_count() + 1};
  std::vector<Edge> list;
  for (const Edge& e : g.edges()) {
    if (e.u != v && e.v != v) list.push_back(e);
  }
  for (int k = 0; k < 3; ++k) {
    list.emplace_back(t[k], nbrs[static_cast<std::size_t>(k)]);
    list.emplace_back(t[k], t[(k + 1) % 3]);
  }
  return Graph::from_edges(g.vertex_count() + 2, list);
}

// Replace edge i by a diamond (K4 minus an edge) whose degree-2 corners take
// the two old endpoints.
Graph insert_diamond(const Graph& g, std::size_t i) {
  const auto edges = g.edges();
  const Vertex a = g.vertex_count();
  const Vertex b = a + 1;
  const Vertex c = a + 2;
  const Vertex d = a + 3;
  std::vector<Edge> list;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (e != i) list.push_back(edges[e]);
  }
  list.insert(list.end(), {{edges[i].u, a}, {a, b}, {a, c}, {b, c}, {b, d}, {c, d}, {d, edges[i].v}});
  return Graph::from_edges(a + 4, list);
}

// Disjoint union of g and h with edge i of g and edge j of h subdivided and
// the two new vertices joined by a bridge.
Graph bridge_join(const Graph& g, std::size_t i, const Graph& h, std::size_t j) {
  const Vertex off = g.vertex_count();
  const Vertex x = off + h.vertex_count();
  const Vertex y = x + 1;
  std::vector<Edge> list;
  const auto ge = g.edges();
  const auto he = h.edges();
  for (std::size_t e = 0; e < ge.size(); ++e) {
    if (e != i) list.push_back(ge[e]);
  }
  for (std::size_t e = 0; e < he.size(); ++e) {
    if (e != j) list.emplace_back(he[e].u + off, he[e].v + off);
  }
  list.insert(list.end(), {{ge[i].u, x}, {x, ge[i].v}, {he[j].u + off, y}, {y, he[j].v + off}, {x, y}});
  return Graph::from_edges(y + 1, list);
}

}  // namespace

std::vector<Graph> enumerate_connected_cubic(int n) {
  if (n < 4 || n % 2 != 0) throw Error("cubic graph needs even n >= 4");
  // levels[m] holds the graphs on m vertices found so far.
  std::map<int, std::map<std::string, Graph>> levels;
  const Graph k4 = make_complete(4);
  levels[4].emplace(canonical_form(k4), k4);
  auto add = [&](Graph g) {
    if (g.vertex_count() > n) return;
    std::string key = canonical_form(g);
    levels[g.vertex_count()].emplace(std::move(key), std::move(g));
  };
  for (int m = 4; m < n; m += 2) {
    // Graphs with a bridge: both sides are smaller cubic graphs with one
    // edge subdivided.
    for (int a = 4; a + a + 2 <= m + 2; a += 2) {
      const int b = m + 2 - 2 - a;
      if (b < a) continue;
      for (const auto& [c1, g] : levels[a]) {
        for (const auto& [c2, h] : levels[b]) {
          for (std::size_t i = 0; i < static_cast<std::size_t>(g.edge_count()); ++i) {
            for (std::size_t j = 0; j < static_cast<std::size_t>(h.edge_count()); ++j) add(bridge_join(g, i, h, j));
          }
        }
      }
    }
    for (const auto& [code, g] : levels[m]) {
      const auto edge_count = static_cast<std::size_t>(g.edge_count());
      for (std::size_t i = 0; i < edge_count; ++i) {
        for (std::size_t j = i + 1; j < edge_count; ++j) add(insert_edge(g, i, j));
        add(insert_diamond(g, i));
      }
      for (Vertex v = 0; v < g.vertex_count(); ++v) add(expand_triangle(g, v));
    }
  }
  std::vector<Graph> out;
  for (auto& [code, g] : levels[n]) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> enumerate_connected_bipartite_subcubic(int n) {
  if (n < 1) throw Error("enumeration needs n >= 1");
  std::map<std::string, Graph> level{{canonical_form(Graph(1)), Graph(1)}};
  for (int m = 2; m <= n; ++m) {
    std::map<std::string, Graph> next;
    for (const auto& [code, g] : level) {
      // Proper 2-colouring of the connected parent; the new vertex may only
      // see one side.
      std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
      for (Vertex v : bfs_order(g, 0)) {
        if (side[static_cast<std::size_t>(v)] < 0) side[static_cast<std::size_t>(v)] = 0;
        for (Vertex w : g.neighbors(v)) {
          if (side[static_cast<std::size_t>(w)] < 0) side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(v)];
        }
      }
      std::vector<Vertex> spare;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < 3) spare.push_back(v);
      }
      const int s = static_cast<int>(spare.size());
      for (int mask = 1; mask < (1 << s); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) > 3) continue;
        int first_side = -1;
        bool ok = true;
        for (int b = 0; b < s && ok; ++b) {
          if (!(mask >> b & 1)) continue;
          const int sd = side[static_cast<std::size_t>(spare[static_cast<std::size_t>(b)])];
          if (first_side < 0) first_side = sd;
          ok = sd == first_side;
        }
        if (!ok) continue;
        Graph grown = g;
        const Vertex v = grown.add_vertex();
        for (int b = 0; b < s; ++b) {
          if (mask >> b & 1) grown.add_edge(spare[static_cast<std::size_t>(b)], v);
        }
        std::string key = canonical_form(grown);
        next.emplace(std::move(key), std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [code, g] : level) out.push_back(std::move(g));
  return out;
}

}  // namespace crumby
