#include "crumby/canonical.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "crumby/codec.hpp"

namespace crumby {
namespace {

using Cells = std::vector<int>;  // vertex -> ordered cell index

int renumber(const Graph& g, Cells& cell, const std::vector<std::vector<int>>& keys) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) order[static_cast<std::size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)];
  });
  int next = -1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || keys[static_cast<std::size_t>(order[i])] != keys[static_cast<std::size_t>(order[i - 1])]) ++next;
    cell[static_cast<std::size_t>(order[i])] = next;
  }
  return next + 1;
}

int refine(const Graph& g, Cells& cell) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  int count = static_cast<int>(std::set<int>(cell.begin(), cell.end()).size());
  while (true) {
    std::vector<std::vector<int>> keys(n);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      auto& key = keys[static_cast<std::size_t>(v)];
      key.push_back(cell[static_cast<std::size_t>(v)]);
      for (Vertex w : g.neighbors(v)) key.push_back(cell[static_cast<std::size_t>(w)]);
      std::sort(key.begin() + 1, key.end());
    }
    const int refined = renumber(g, cell, keys);
    if (refined == count) return count;
    count = refined;
  }
}

struct Search {
  const Graph& g;
  std::optional<std::string> best;
  std::vector<Vertex> best_order;

  void run(Cells cell, int count) {
    const int n = g.vertex_count();
    if (count == n) {
      std::vector<Vertex> order(static_cast<std::size_t>(n));
      for (Vertex v = 0; v < n; ++v) order[static_cast<std::size_t>(cell[static_cast<std::size_t>(v)])] = v;
      std::string code = write_graph6(permute(g, order));
      if (!best || code < *best) {
        best = std::move(code);
        best_order = std::move(order);
      }
      return;
    }
    std::vector<int> size(static_cast<std::size_t>(count), 0);
    for (int c : cell) ++size[static_cast<std::size_t>(c)];
    int target = 0;
    while (size[static_cast<std::size_t>(target)] == 1) ++target;
    for (Vertex v = 0; v < n; ++v) {
      if (cell[static_cast<std::size_t>(v)] != target) continue;
      std::vector<std::vector<int>> keys(static_cast<std::size_t>(n));
      for (Vertex u = 0; u < n; ++u) {
        keys[static_cast<std::size_t>(u)] = {cell[static_cast<std::size_t>(u)], u == v ? 0 : 1};
      }
      Cells next = cell;
      renumber(g, next, keys);
      const int c = refine(g, next);
      run(std::move(next), c);
    }
  }
};

}  // namespace

Graph permute(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<Vertex> position(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[static_cast<std::size_t>(order[i])] = static_cast<Vertex>(i);
  Graph out(g.vertex_count());
  for (const Edge& e : g.edges()) out.add_edge(position[static_cast<std::size_t>(e.u)], position[static_cast<std::size_t>(e.v)]);
  return out;
}

std::vector<Vertex> canonical_labeling(const Graph& g) {
  if (g.vertex_count() == 0) return {};
  Cells cell(static_cast<std::size_t>(g.vertex_count()), 0);
  const int count = refine(g, cell);
  Search search{g, std::nullopt, {}};
  search.run(std::move(cell), count);
  return search.best_order;
}

std::string canonical_form(const Graph& g) { return write_graph6(permute(g, canonical_labeling(g))); }

}  // namespace crumby
