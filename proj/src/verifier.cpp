#include "crumby/verifier.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <sstream>

#include "crumby/error.hpp"

namespace crumby {

std::string_view to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::BlueDegreeExceeded:
      return "BlueDegreeExceeded";
    case Violation::Kind::RedIsolated:
      return "RedIsolated";
    case Violation::Kind::RedP4:
      return "RedP4";
    case Violation::Kind::BadComponentShape:
      return "BadComponentShape";
  }
  return "?";
}

std::string VerifierReport::to_text() const {
  if (ok) return "ok\n";
  std::ostringstream out;
  for (const auto& v : violations) {
    out << to_string(v.kind);
    for (Vertex w : v.witness) out << ' ' << w;
    if (!v.detail.empty()) out << " (" << v.detail << ')';
    out << '\n';
  }
  return out.str();
}

namespace {

std::vector<Vertex> same_color_neighbors(const Graph& g, const Coloring& c, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(v)) {
    if (c[w] == c[v]) out.push_back(w);
  }
  return out;
}

// Depth-3 search for a red path a-b-c-d starting at `start`.
std::optional<std::vector<Vertex>> red_p4_from(const Graph& g, const Coloring& c, Vertex start) {
  std::vector<Vertex> path{start};
  auto extend = [&](auto&& self) -> bool {
    if (path.size() == 4) return true;
    for (Vertex w : g.neighbors(path.back())) {
      if (!c.is_red(w) || std::find(path.begin(), path.end(), w) != path.end()) continue;
      path.push_back(w);
      if (self(self)) return true;
      path.pop_back();
    }
    return false;
  };
  if (extend(extend)) return path;
  return std::nullopt;
}

}  // namespace

VerifierReport verify_crumby(const Graph& g, const Coloring& c) {
  if (c.size() != g.vertex_count()) {
    throw Error("coloring has " + std::to_string(c.size()) + " entries for " + std::to_string(g.vertex_count()) +
                " vertices");
  }
  VerifierReport report;
  const int n = g.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    auto same = same_color_neighbors(g, c, v);
    if (c.is_blue(v) && same.size() > 1) {
      std::vector<Vertex> witness{v};
      witness.insert(witness.end(), same.begin(), same.end());
      report.violations.push_back({Violation::Kind::BlueDegreeExceeded, std::move(witness), ""});
    }
    if (c.is_red(v) && same.empty()) {
      report.violations.push_back({Violation::Kind::RedIsolated, {v}, ""});
    }
  }

  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex s = 0; s < n; ++s) {
    if (!c.is_red(s) || seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> comp;
    std::deque<Vertex> queue{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (c.is_red(w) && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    for (Vertex v : comp) {
      if (auto p4 = red_p4_from(g, c, v)) {
        report.violations.push_back({Violation::Kind::RedP4, std::move(*p4), ""});
        break;
      }
    }
  }

  // Cross-check against the shape classification; a disagreement here means
  // one of the two readings of the predicate is wrong.
  const bool direct_ok = report.violations.empty();
  auto shapes = component_shapes(g, c);
  if (direct_ok && !shapes_acceptable(shapes)) {
    for (const auto& s : shapes) {
      if (s.kind == ComponentShape::Kind::Other) {
        report.violations.push_back({Violation::Kind::BadComponentShape, s.vertices, "shape classification"});
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

bool is_crumby(const Graph& g, const Coloring& c) { return verify_crumby(g, c).ok; }

bool witness_holds(const Graph& g, const Coloring& c, const Violation& v) {
  const auto& w = v.witness;
  switch (v.kind) {
    case Violation::Kind::BlueDegreeExceeded: {
      if (w.size() < 3 || !c.is_blue(w[0])) return false;
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (!c.is_blue(w[i]) || !g.has_edge(w[0], w[i])) return false;
      }
      return true;
    }
    case Violation::Kind::RedIsolated: {
      if (w.size() != 1 || !c.is_red(w[0])) return false;
      for (Vertex x : g.neighbors(w[0])) {
        if (c.is_red(x)) return false;
      }
      return true;
    }
    case Violation::Kind::RedP4: {
      if (w.size() != 4) return false;
      for (std::size_t i = 0; i < 4; ++i) {
        if (!c.is_red(w[i])) return false;
        for (std::size_t j = i + 1; j < 4; ++j) {
          if (w[i] == w[j]) return false;
        }
      }
      return g.has_edge(w[0], w[1]) && g.has_edge(w[1], w[2]) && g.has_edge(w[2], w[3]);
    }
    case Violation::Kind::BadComponentShape:
      return !w.empty();
  }
  return false;
}

std::vector<ComponentShape> component_shapes(const Graph& g, const Coloring& c) {
  if (c.size() != g.vertex_count()) throw Error("coloring size mismatch");
  std::vector<ComponentShape> shapes;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    const Color color = c[s];
    std::vector<Vertex> comp;
    std::deque<Vertex> queue{s};
    seen[static_cast<std::size_t>(s)] = 1;
    int degree_sum = 0;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (c[w] != color) continue;
        ++degree_sum;
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    const int size = static_cast<int>(comp.size());
    const int edges = degree_sum / 2;
    ComponentShape shape{ComponentShape::Kind::Other, 0, color, comp};
    if (color == Color::Blue) {
      if (size == 1) shape.kind = ComponentShape::Kind::BlueSingleton;
      if (size == 2) shape.kind = ComponentShape::Kind::BlueEdge;
    } else if (size == 3 && edges == 3) {
      shape.kind = ComponentShape::Kind::RedTriangle;
    } else if (edges == size - 1) {
      int centre_degree = 0;
      for (Vertex v : comp) {
        int d = 0;
        for (Vertex w : g.neighbors(v)) d += c.is_red(w) ? 1 : 0;
        centre_degree = std::max(centre_degree, d);
      }
      if (centre_degree == size - 1) {
        shape.kind = ComponentShape::Kind::RedStar;
        shape.leaves = size - 1;
      }
    }
    shapes.push_back(std::move(shape));
  }
  return shapes;
}

bool shapes_acceptable(const std::vector<ComponentShape>& shapes) {
  return std::all_of(shapes.begin(), shapes.end(), [](const ComponentShape& s) {
    switch (s.kind) {
      case ComponentShape::Kind::RedStar:
        return s.leaves >= 1;
      case ComponentShape::Kind::RedTriangle:
      case ComponentShape::Kind::BlueSingleton:
      case ComponentShape::Kind::BlueEdge:
        return true;
      case ComponentShape::Kind::Other:
        return false;
    }
    return false;
  });
}

std::string_view to_string(PatternPurpose p) {
  switch (p) {
    case PatternPurpose::EndpointsSingletonRed:
      return "singleton";
    case PatternPurpose::EndpointsInRedK2:
      return "k2";
    case PatternPurpose::MixedSingletonAndK2:
      return "mixed";
  }
  return "?";
}

namespace {

enum class EndKind { Singleton, InK2, Other };

// Structure at the endpoint pattern[0] looking inward.
EndKind end_kind(const std::string& p) {
  if (p.size() < 2) return EndKind::Other;
  if (p[1] == 'b') return EndKind::Singleton;
  if (p.size() == 2 || p[2] == 'b') return EndKind::InK2;
  return EndKind::Other;
}

}  // namespace

bool validate_pattern(std::string_view pattern, PatternPurpose purpose) {
  if (pattern.size() < 2) return false;
  std::string p;
  for (char ch : pattern) {
    const char lower = static_cast<char>(ch | 0x20);
    if (lower != 'r' && lower != 'b') return false;
    p.push_back(lower);
  }
  const int k = static_cast<int>(p.size());
  if (p.front() != 'r' || p.back() != 'r') return false;

  const Graph path = make_path(k);
  const Coloring coloring = Coloring::from_string(p);
  for (const auto& v : verify_crumby(path, coloring).violations) {
    const bool endpoint_isolation =
        v.kind == Violation::Kind::RedIsolated && (v.witness[0] == 0 || v.witness[0] == k - 1);
    if (!endpoint_isolation) return false;
  }

  std::string reversed(p.rbegin(), p.rend());
  const EndKind first = end_kind(p);
  const EndKind last = end_kind(reversed);
  switch (purpose) {
    case PatternPurpose::EndpointsSingletonRed:
      return first == EndKind::Singleton && last == EndKind::Singleton;
    case PatternPurpose::EndpointsInRedK2:
      return first == EndKind::InK2 && last == EndKind::InK2;
    case PatternPurpose::MixedSingletonAndK2:
      return (first == EndKind::InK2 && last == EndKind::Singleton) ||
             (first == EndKind::Singleton && last == EndKind::InK2);
  }
  throw Error("unknown pattern purpose");
}

}  // namespace crumby
