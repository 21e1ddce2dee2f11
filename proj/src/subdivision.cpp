#include "crumby/subdivision.hpp"

#include <algorithm>
#include <set>

#include "crumby/error.hpp"

namespace crumby {

int SubdividedGraph::edge_index(Edge e) const {
  auto it = std::lower_bound(base_edges_.begin(), base_edges_.end(), e);
  if (it == base_edges_.end() || *it != e) return -1;
  return static_cast<int>(it - base_edges_.begin());
}

int SubdividedGraph::count(Edge e) const {
  const int idx = edge_index(e);
  if (idx < 0) throw Error("not a base edge");
  return counts_[static_cast<std::size_t>(idx)];
}

std::vector<Vertex> SubdividedGraph::edge_path(int index) const {
  const Edge& e = base_edges_.at(static_cast<std::size_t>(index));
  std::vector<Vertex> path{e.u};
  const int c = counts_[static_cast<std::size_t>(index)];
  for (int p = 0; p < c; ++p) path.push_back(first_internal_[static_cast<std::size_t>(index)] + p);
  path.push_back(e.v);
  return path;
}

bool SubdividedGraph::genuine() const { return min_count() >= 1; }

bool SubdividedGraph::all_counts(int value) const {
  return std::all_of(counts_.begin(), counts_.end(), [value](int c) { return c == value; });
}

int SubdividedGraph::min_count() const {
  return counts_.empty() ? 0 : *std::min_element(counts_.begin(), counts_.end());
}

SubdividedGraph subdivide(const Graph& base, std::span<const int> counts) {
  SubdividedGraph sg;
  sg.base_ = base;
  sg.base_edges_ = base.edges();
  if (counts.size() != sg.base_edges_.size()) {
    throw Error("subdivide: " + std::to_string(counts.size()) + " counts for " +
                std::to_string(sg.base_edges_.size()) + " edges");
  }
  sg.counts_.assign(counts.begin(), counts.end());
  int total = base.vertex_count();
  for (int c : sg.counts_) {
    if (c < 0) throw Error("subdivide: negative count");
    total += c;
  }

  sg.expanded_ = Graph(total);
  sg.provenance_.resize(static_cast<std::size_t>(total));
  for (Vertex v = 0; v < base.vertex_count(); ++v) {
    sg.provenance_[static_cast<std::size_t>(v)] = {Provenance::Kind::Branch, v, -1, 0};
  }
  Vertex next = base.vertex_count();
  for (std::size_t i = 0; i < sg.base_edges_.size(); ++i) {
    sg.first_internal_.push_back(next);
    const Edge& e = sg.base_edges_[i];
    Vertex prev = e.u;
    for (int p = 1; p <= sg.counts_[i]; ++p, ++next) {
      sg.provenance_[static_cast<std::size_t>(next)] = {Provenance::Kind::Internal, -1, static_cast<int>(i), p};
      sg.expanded_.add_edge(prev, next);
      prev = next;
    }
    sg.expanded_.add_edge(prev, e.v);
  }
  return sg;
}

SubdividedGraph subdivide(const Graph& base, const std::map<Edge, int>& counts) {
  auto edges = base.edges();
  std::vector<int> aligned(edges.size(), 0);
  for (const auto& [edge, c] : counts) {
    auto it = std::lower_bound(edges.begin(), edges.end(), edge);
    if (it == edges.end() || *it != edge) {
      throw Error("subdivide: " + std::to_string(edge.u) + "-" + std::to_string(edge.v) + " is not a base edge");
    }
    aligned[static_cast<std::size_t>(it - edges.begin())] = c;
  }
  return subdivide(base, aligned);
}

SubdividedGraph subdivide_uniform(const Graph& base, int count) {
  std::vector<int> counts(static_cast<std::size_t>(base.edge_count()), count);
  return subdivide(base, counts);
}

bool ThreadStructure::simple_base() const {
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const Thread& t : threads) {
    if (t.a == t.b) return false;
    if (!seen.emplace(std::min(t.a, t.b), std::max(t.a, t.b)).second) return false;
  }
  return true;
}

ThreadStructure branch_threads(const Graph& g) {
  ThreadStructure ts;
  std::vector<char> is_branch(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 2) {
      ts.branch.push_back(v);
      is_branch[static_cast<std::size_t>(v)] = 1;
    }
  }
  if (ts.branch.empty()) throw Error("graph has no branch vertex");

  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  std::set<Edge> direct;
  for (Vertex a : ts.branch) {
    for (Vertex first : g.neighbors(a)) {
      if (is_branch[static_cast<std::size_t>(first)]) {
        if (direct.insert(Edge(a, first)).second) ts.threads.push_back({std::min(a, first), std::max(a, first), {}});
        continue;
      }
      if (used[static_cast<std::size_t>(first)]) continue;
      Thread t{a, -1, {}};
      Vertex prev = a;
      Vertex cur = first;
      while (!is_branch[static_cast<std::size_t>(cur)]) {
        used[static_cast<std::size_t>(cur)] = 1;
        t.internal.push_back(cur);
        auto nbrs = g.neighbors(cur);
        Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
        prev = cur;
        cur = next;
      }
      t.b = cur;
      if (t.b < t.a) {
        std::swap(t.a, t.b);
        std::reverse(t.internal.begin(), t.internal.end());
      }
      ts.threads.push_back(std::move(t));
    }
  }
  return ts;
}

ThreadStructure thread_structure(const SubdividedGraph& sg) {
  ThreadStructure ts;
  for (Vertex v = 0; v < sg.base().vertex_count(); ++v) ts.branch.push_back(v);
  for (std::size_t i = 0; i < sg.base_edges().size(); ++i) {
    auto path = sg.edge_path(static_cast<int>(i));
    ts.threads.push_back({path.front(), path.back(), std::vector<Vertex>(path.begin() + 1, path.end() - 1)});
  }
  return ts;
}

SubdivisionDetection detect_subdivision_structure(const Graph& g) {
  SubdivisionDetection out;
  if (!is_connected(g)) {
    out.failure = SubdivisionDetection::Failure::NotConnected;
    out.message = "graph is not connected";
    return out;
  }
  if (!g.is_subcubic()) {
    out.failure = SubdivisionDetection::Failure::NotSubcubic;
    out.message = "graph has a vertex of degree > 3";
    return out;
  }
  bool any_branch = false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) any_branch = any_branch || g.degree(v) != 2;
  if (!any_branch) {
    out.failure = SubdivisionDetection::Failure::NoBranchVertex;
    out.message = "graph has no branch vertex (cycle)";
    return out;
  }

  ThreadStructure ts = branch_threads(g);
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const Thread& t : ts.threads) {
    if (t.a == t.b || !seen.emplace(t.a, t.b).second) {
      out.failure = SubdivisionDetection::Failure::MultigraphBase;
      out.offending_pair = std::make_pair(t.a, t.b);
      out.message = t.a == t.b ? "suppressed base has a loop at " + std::to_string(t.a)
                               : "suppressed base has parallel edges " + std::to_string(t.a) + "-" +
                                     std::to_string(t.b);
      out.threads = std::move(ts);
      return out;
    }
  }

  std::vector<int> base_id(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < ts.branch.size(); ++i) base_id[static_cast<std::size_t>(ts.branch[i])] = static_cast<int>(i);
  Graph base(static_cast<int>(ts.branch.size()));
  std::map<Edge, const Thread*> by_edge;
  for (const Thread& t : ts.threads) {
    Edge e(base_id[static_cast<std::size_t>(t.a)], base_id[static_cast<std::size_t>(t.b)]);
    base.add_edge(e.u, e.v);
    by_edge[e] = &t;
  }
  std::map<Edge, int> counts;
  for (const auto& [e, t] : by_edge) counts[e] = static_cast<int>(t->internal.size());
  SubdividedGraph sg = subdivide(base, counts);

  out.expanded_to_input.assign(static_cast<std::size_t>(sg.expanded().vertex_count()), -1);
  for (std::size_t i = 0; i < ts.branch.size(); ++i) out.expanded_to_input[i] = ts.branch[i];
  for (std::size_t i = 0; i < sg.base_edges().size(); ++i) {
    const Edge& e = sg.base_edges()[i];
    const Thread& t = *by_edge.at(e);
    auto path = sg.edge_path(static_cast<int>(i));
    // Thread internals run from t.a to t.b in input ids; path runs from the
    // smaller base id to the larger.
    std::vector<Vertex> internal = t.internal;
    if (base_id[static_cast<std::size_t>(t.a)] != e.u) std::reverse(internal.begin(), internal.end());
    for (std::size_t p = 0; p < internal.size(); ++p) out.expanded_to_input[static_cast<std::size_t>(path[p + 1])] = internal[p];
  }
  out.subdivided = std::move(sg);
  out.threads = std::move(ts);
  return out;
}

}  // namespace crumby
