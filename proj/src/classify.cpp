#include "crumby/classify.hpp"

#include <array>

#include "crumby/error.hpp"
#include "crumby/k4sub.hpp"
#include "crumby/outerplanar.hpp"
#include "crumby/subdivision.hpp"
#include "crumby/subdivisions.hpp"
#include "crumby/trees.hpp"

namespace crumby {

namespace {

constexpr std::array<std::pair<GraphClass, std::string_view>, 8> kNames{{
    {GraphClass::Tree, "tree"},
    {GraphClass::K4Subdivision, "k4sub"},
    {GraphClass::OneSubdivisionOfCubic, "one-subdivision"},
    {GraphClass::DeepSubdivision, "deep-subdivision"},
    {GraphClass::GenuineSubdivision, "genuine-subdivision"},
    {GraphClass::TwoConnectedOuterplanar, "outerplanar"},
    {GraphClass::CycleWithTrees, "cycle-with-trees"},
    {GraphClass::Unknown, "unknown"},
}};

bool cubic(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) return false;
  }
  return g.vertex_count() > 0;
}

// The detected subdivision when its base is simple.
std::optional<SubdivisionDetection> detected(const Graph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  auto d = detect_subdivision_structure(g);
  if (!d.ok() || !d.subdivided) return std::nullopt;
  return d;
}

bool genuine_enough(const SubdividedGraph& sg) {
  const Graph& b = sg.base();
  for (std::size_t i = 0; i < sg.base_edges().size(); ++i) {
    const Edge& e = sg.base_edges()[i];
    if (sg.counts()[i] == 0 && b.degree(e.u) != 1 && b.degree(e.v) != 1) return false;
  }
  return true;
}

Coloring to_input(const SubdivisionDetection& d, const Coloring& c) {
  Coloring out(c.size());
  for (Vertex v = 0; v < c.size(); ++v) out[d.expanded_to_input[static_cast<std::size_t>(v)]] = c[v];
  return out;
}

SolveResult sat(Coloring c) {
  SolveResult r;
  r.status = SolveStatus::Sat;
  r.coloring = std::move(c);
  return r;
}

}  // namespace

std::string_view to_string(GraphClass c) {
  for (const auto& [tag, name] : kNames) {
    if (tag == c) return name;
  }
  return "unknown";
}

std::optional<GraphClass> parse_graph_class(std::string_view name) {
  for (const auto& [tag, n] : kNames) {
    if (n == name) return tag;
  }
  return std::nullopt;
}

bool in_class(const Graph& g, GraphClass c) {
  switch (c) {
    case GraphClass::Tree:
      return is_tree(g) && g.is_subcubic();
    case GraphClass::K4Subdivision: {
      const auto d = detected(g);
      return d && d->subdivided->base().vertex_count() == 4 && d->subdivided->base().edge_count() == 6;
    }
    case GraphClass::OneSubdivisionOfCubic: {
      const auto d = detected(g);
      return d && cubic(d->subdivided->base()) && d->subdivided->all_counts(1);
    }
    case GraphClass::DeepSubdivision: {
      const auto d = detected(g);
      return d && cubic(d->subdivided->base()) && d->subdivided->min_count() >= 2;
    }
    case GraphClass::GenuineSubdivision: {
      const auto d = detected(g);
      return d && genuine_enough(*d->subdivided);
    }
    case GraphClass::TwoConnectedOuterplanar:
      return g.is_subcubic() && embed_outerplanar(g).ok();
    case GraphClass::CycleWithTrees:
      return g.vertex_count() >= 3 && is_connected(g) && g.is_subcubic() && g.edge_count() == g.vertex_count();
    case GraphClass::Unknown:
      return true;
  }
  return false;
}

GraphClass classify(const Graph& g, std::optional<GraphClass> hint) {
  if (hint) {
    if (!in_class(g, *hint)) throw Error("graph is not in class " + std::string(to_string(*hint)));
    return *hint;
  }
  for (const auto& [tag, name] : kNames) {
    if (in_class(g, tag)) return tag;
  }
  return GraphClass::Unknown;
}

SolveResult solve_in_class(const Graph& g, GraphClass c, const Prescription& p) {
  p.check(g.vertex_count());
  if (!in_class(g, c)) throw Error("graph is not in class " + std::string(to_string(c)));
  Coloring out;
  switch (c) {
    case GraphClass::Tree:
      return solve_tree(g, p);
    case GraphClass::TwoConnectedOuterplanar: {
      if (p.fixed.size() > 1) throw Error("outerplanar solver takes at most one prescribed vertex; use --exact");
      if (p.fixed.empty()) return sat(solve_outerplanar_2conn(g, 0, Color::Red));
      return sat(solve_outerplanar_2conn(g, p.fixed.begin()->first, p.fixed.begin()->second));
    }
    case GraphClass::CycleWithTrees:
      out = solve_cycle_with_trees(g);
      break;
    case GraphClass::K4Subdivision: {
      const auto d = *detected(g);
      const auto& sg = *d.subdivided;
      K4Counts counts{};
      for (std::size_t i = 0; i < 6; ++i) counts[i] = sg.counts()[i];
      out = to_input(d, solve_k4_subdivision(counts));
      break;
    }
    case GraphClass::OneSubdivisionOfCubic: {
      const auto d = *detected(g);
      out = to_input(d, solve_one_subdivision(*d.subdivided));
      break;
    }
    case GraphClass::DeepSubdivision: {
      const auto d = *detected(g);
      out = to_input(d, solve_deep_subdivision(*d.subdivided));
      break;
    }
    case GraphClass::GenuineSubdivision: {
      const auto d = *detected(g);
      out = to_input(d, solve_genuine_subdivision(*d.subdivided));
      break;
    }
    case GraphClass::Unknown:
      throw Error("no constructive solver for this graph; use --exact");
  }
  if (!p.satisfied_by(out)) {
    throw Error("the " + std::string(to_string(c)) + " solver cannot honour prescriptions; use --exact");
  }
  return sat(std::move(out));
}

}  // namespace crumby
