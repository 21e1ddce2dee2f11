#include "crumby/subdivisions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <sstream>

#include "crumby/codec.hpp"
#include "crumby/error.hpp"
#include "crumby/fixtures.hpp"
#include "crumby/matching.hpp"
#include "crumby/trees.hpp"

namespace crumby {

namespace {

std::string lower(std::string s) {
  for (char& ch : s) ch = static_cast<char>(ch | 0x20);
  return s;
}

bool k2_first(const std::string& p) { return p.size() >= 3 && p[0] == 'r' && p[1] == 'r' && p[2] == 'b'; }

bool achieves(const std::string& p, PatternPurpose purpose) {
  if (!validate_pattern(p, purpose)) return false;
  return purpose != PatternPurpose::MixedSingletonAndK2 || k2_first(p);
}

std::optional<std::string> search_pattern(int k, PatternPurpose purpose) {
  if (k > 26) return std::nullopt;
  const int inner = k - 2;
  for (std::uint32_t bits = 0; bits < (1u << inner); ++bits) {
    // Bit i of `bits` set means internal vertex inner-1-i is red, so the
    // loop visits strings in increasing order with 'b' < 'r'.
    std::string p(static_cast<std::size_t>(k), 'b');
    p.front() = p.back() = 'r';
    for (int i = 0; i < inner; ++i) {
      if (bits >> (inner - 1 - i) & 1u) p[static_cast<std::size_t>(i + 1)] = 'r';
    }
    if (achieves(p, purpose)) return p;
  }
  return std::nullopt;
}

std::string phase_failure(const char* phase, const SubdividedGraph& sg, const VerifierReport& report) {
  std::ostringstream out;
  out << phase << ": colouring is not crumby on base " << write_graph6(sg.base()) << " counts";
  for (int c : sg.counts()) out << ' ' << c;
  out << "; " << report.to_text();
  return out.str();
}

void check_result(const char* phase, const SubdividedGraph& sg, const Coloring& c) {
  const auto report = verify_crumby(sg.expanded(), c);
  if (!report.ok) throw InvariantViolation(phase_failure(phase, sg, report));
}

bool is_cubic(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) return false;
  }
  return true;
}

// Expanded path of the base edge {a, b}, starting at a.
std::vector<Vertex> path_from(const SubdividedGraph& sg, Vertex a, Vertex b) {
  auto path = sg.edge_path(sg.edge_index(Edge(a, b)));
  if (path.front() != a) std::reverse(path.begin(), path.end());
  return path;
}

// Colours the internal vertices of the a-b path from a pattern read from a
// (endpoint characters are ignored).
void paint(Coloring& c, const SubdividedGraph& sg, Vertex a, Vertex b, const std::string& pattern) {
  const auto path = path_from(sg, a, b);
  if (pattern.size() != path.size()) throw InvariantViolation("pattern length does not match the subdivided edge");
  for (std::size_t i = 1; i + 1 < path.size(); ++i) c[path[i]] = pattern[i] == 'r' ? Color::Red : Color::Blue;
}

}  // namespace

PathPattern path_pattern(int k, PatternPurpose purpose) {
  if (k < 3) throw Error("path patterns need k >= 3");
  PathPattern out;
  out.k = k;
  out.purpose = purpose;
  if (k <= 8) {
    const auto& table = fixtures().table1;
    const auto row = std::find_if(table.begin(), table.end(), [k](const Table1Row& r) { return r.k == k; });
    if (row == table.end()) throw InvariantViolation("table1 fixture has no row for k=" + std::to_string(k));
    const std::string& cell = purpose == PatternPurpose::EndpointsSingletonRed ? row->singleton
                              : purpose == PatternPurpose::EndpointsInRedK2   ? row->k2
                                                                              : row->mixed;
    out.colors = lower(cell);
    out.attainable = achieves(out.colors, purpose);
    return out;
  }
  const std::string prev = path_pattern(k - 3, purpose).colors;
  if (purpose == PatternPurpose::EndpointsSingletonRed) {
    out.colors = prev.substr(0, 1) + "brr" + prev.substr(1);
  } else {
    out.colors = "rrb" + prev;
  }
  if (!achieves(out.colors, purpose)) {
    auto found = search_pattern(k, purpose);
    if (!found) throw InvariantViolation("no path pattern for k = " + std::to_string(k));
    out.colors = *found;
  }
  out.attainable = true;
  return out;
}

Coloring solve_one_subdivision(const SubdividedGraph& sg) {
  const Graph& g = sg.base();
  if (!is_cubic(g)) throw Error("1-subdivision solver needs a cubic base");
  if (!sg.all_counts(1)) throw Error("1-subdivision solver needs every edge subdivided exactly once");
  Coloring c(sg.expanded().vertex_count(), Color::Blue);
  for (Vertex v = 0; v < g.vertex_count(); ++v) c[v] = Color::Red;
  auto middle = [&](Vertex a, Vertex b) { return path_from(sg, a, b)[1]; };

  const EGDecomposition d = edmonds_gallai(g);
  for (const Edge& e : d.matching.edges()) c[middle(e.u, e.v)] = Color::Red;
  for (std::size_t i = 0; i < d.odd_components.size(); ++i) {
    const auto& role = d.roles[i];
    if (role.saturated) continue;
    const Vertex x = role.exposed;
    Vertex y = -1;
    for (Vertex w : g.neighbors(x)) {
      if (d.odd_component_of[static_cast<std::size_t>(w)] == static_cast<int>(i) && (y == -1 || w < y)) y = w;
    }
    if (y == -1) throw InvariantViolation("1-subdivision: unsaturated odd component is a single vertex");
    c[middle(x, y)] = Color::Red;
    c[y] = Color::Blue;
  }
  check_result("1-subdivision", sg, c);
  return c;
}

namespace {

std::string deep_internal(int count) {
  static const std::array<const char*, 7> kFixed{"rr", "rrr", "rrrb", "rrbrr", "rrrbrr", "rrbbrrr", "rrbrrbrr"};
  if (count <= 8) return kFixed[static_cast<std::size_t>(count - 2)];
  return "rrb" + deep_internal(count - 3);
}

int red_component_size(const Graph& g, const Coloring& c, Vertex v) {
  std::vector<Vertex> seen{v};
  for (std::size_t i = 0; i < seen.size(); ++i) {
    for (Vertex w : g.neighbors(seen[i])) {
      if (c.is_red(w) && std::find(seen.begin(), seen.end(), w) == seen.end()) seen.push_back(w);
    }
  }
  return static_cast<int>(seen.size());
}

}  // namespace

Coloring solve_deep_subdivision(const SubdividedGraph& sg) {
  const Graph& g = sg.base();
  if (!is_cubic(g)) throw Error("deep-subdivision solver needs a cubic base");
  if (sg.min_count() < 2) throw Error("deep-subdivision solver needs every edge subdivided at least twice");
  const Graph& h = sg.expanded();
  Coloring c(h.vertex_count(), Color::Blue);
  for (std::size_t i = 0; i < sg.base_edges().size(); ++i) {
    const Edge e = sg.base_edges()[i];
    paint(c, sg, e.u, e.v, "b" + deep_internal(sg.counts()[i]) + "b");
  }
  auto other_side = [&](Vertex n1, Vertex center) {
    for (Vertex w : h.neighbors(n1)) {
      if (w != center) return w;
    }
    return Vertex{-1};
  };
  auto red_degree = [&](Vertex v) {
    int d = 0;
    for (Vertex w : h.neighbors(v)) d += c.is_red(w) ? 1 : 0;
    return d;
  };
  for (Vertex center = 0; center < g.vertex_count(); ++center) {
    while (c.is_blue(center)) {
      std::vector<Vertex> blue, red;
      for (Vertex w : h.neighbors(center)) (c.is_blue(w) ? blue : red).push_back(w);
      if (blue.size() < 2) break;
      std::sort(blue.begin(), blue.end());
      // A blue neighbour next to the end of a red K2 (left behind by an
      // earlier repair on the same edge) turns red and makes it a P3.
      bool extended = false;
      for (Vertex n1 : blue) {
        const Vertex n2 = other_side(n1, center);
        if (c.is_red(n2) && red_component_size(h, c, n2) == 2) {
          c[n1] = Color::Red;
          extended = true;
          break;
        }
      }
      if (extended) continue;
      // n1 red, n2 blue: n2 must end a red P3 so the rest stays a K2.
      Vertex n1 = -1;
      for (Vertex cand : blue) {
        const Vertex n2 = other_side(cand, center);
        if (c.is_red(n2) && red_degree(n2) == 1 && red_component_size(h, c, n2) == 3) {
          n1 = cand;
          break;
        }
      }
      if (blue.size() == 3) {
        if (n1 < 0) throw InvariantViolation("deep subdivision: no recolourable neighbour at a blue 3-star");
        c[center] = Color::Red;
        c[n1] = Color::Red;
        c[other_side(n1, center)] = Color::Blue;
        break;
      }
      const Vertex v = red.front();
      const int size = red_component_size(h, c, v);
      if (size == 2) {
        c[center] = Color::Red;
      } else if (size == 3 && red_degree(v) == 1 && n1 >= 0) {
        c[center] = Color::Red;
        c[n1] = Color::Red;
        c[other_side(n1, center)] = Color::Blue;
        c[v] = Color::Blue;
      } else {
        throw InvariantViolation("deep subdivision: blue 2-star next to a red component of size " + std::to_string(size));
      }
      break;
    }
  }
  check_result("deep subdivision", sg, c);
  return c;
}

namespace {

enum class Grant : std::uint8_t { None, Both, Flexible };

class GenuineSolver {
 public:
  explicit GenuineSolver(const SubdividedGraph& sg)
      : sg_(sg), g_(sg.base()), h_(sg.expanded()), c_(h_.vertex_count(), Color::Blue) {}

  Coloring run() {
    check_input();
    const int n = g_.vertex_count();
    small_.assign(static_cast<std::size_t>(n), 0);
    for (const auto& comp : connected_components(g_)) {
      if (comp.size() != 2) continue;
      solve_path_component(comp[0], comp[1]);
      small_[static_cast<std::size_t>(comp[0])] = small_[static_cast<std::size_t>(comp[1])] = 1;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (!small_[static_cast<std::size_t>(v)]) c_[v] = Color::Red;
    }
    const EGDecomposition d = edmonds_gallai(g_);
    matching_ = d.matching;
    exposed_.assign(static_cast<std::size_t>(n), 0);
    for (const auto& role : d.roles) {
      if (!role.saturated) exposed_[static_cast<std::size_t>(role.exposed)] = 1;
    }
    cover_.assign(static_cast<std::size_t>(n), 0);
    k2_at_.assign(sg_.base_edges().size(), -1);

    for (const Edge& e : matching_.edges()) {
      if (!small_[static_cast<std::size_t>(e.u)] && grant_of(count(e)) == Grant::Both) {
        ++cover(e.u);
        ++cover(e.v);
      }
    }
    plan_away_from_matching();
    plan_at_exposed();
    rebalance();
    paint_planned();
    color_matching_edges();
    for (Vertex v = 0; v < n; ++v) {
      if (!singleton(v)) continue;
      if (feasible_blue(v, -1)) {
        make_blue(v, -1);
      } else {
        steal(v);
      }
    }
    check_result("genuine subdivision", sg_, c_);
    return c_;
  }

 private:
  void check_input() const {
    if (!g_.is_subcubic()) throw Error("genuine-subdivision solver needs a subcubic base");
    for (const Edge& e : g_.edges()) {
      if (count(e) == 0 && g_.degree(e.u) != 1 && g_.degree(e.v) != 1) {
        throw Error("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not subdivided");
      }
    }
  }

  int count(Edge e) const { return sg_.count(e); }
  int index(Vertex a, Vertex b) const { return sg_.edge_index(Edge(a, b)); }

  static Grant grant_of(int c) {
    if (c == 1) return Grant::None;
    if (c == 2 || c == 5) return Grant::Flexible;
    return Grant::Both;
  }

  void solve_path_component(Vertex a, Vertex b) {
    const auto path = path_from(sg_, a, b);
    const auto r = solve_tree(make_path(static_cast<int>(path.size())));
    if (!r.coloring) throw InvariantViolation("subdivided edge component has no crumby colouring");
    for (std::size_t i = 0; i < path.size(); ++i) c_[path[i]] = (*r.coloring)[static_cast<Vertex>(i)];
  }

  bool in_matching(Vertex a, Vertex b) const { return matching_.contains(a, b); }
  bool exposed(Vertex v) const { return exposed_[static_cast<std::size_t>(v)] != 0; }
  int& cover(Vertex v) { return cover_[static_cast<std::size_t>(v)]; }

  // Records the edge a-b for painting; a flexible edge gives its red K2 to
  // `k2_at`.
  void plan(Vertex a, Vertex b, Vertex k2_at) {
    const int i = index(a, b);
    planned_.push_back(i);
    switch (grant_of(count(Edge(a, b)))) {
      case Grant::None:
        return;
      case Grant::Both:
        ++cover(a);
        ++cover(b);
        return;
      case Grant::Flexible:
        k2_at_[static_cast<std::size_t>(i)] = k2_at;
        ++cover(k2_at);
        return;
    }
  }

  // Paths and cycles of G - M - {exposed}: paths from their smallest leaf,
  // cycles from their smallest vertex towards its smaller neighbour. A
  // flexible edge serves its first end unless that end already has a red
  // neighbour.
  void plan_away_from_matching() {
    const int n = g_.vertex_count();
    auto usable = [&](Vertex a, Vertex b) {
      return !small_[static_cast<std::size_t>(a)] && !in_matching(a, b) && !exposed(a) && !exposed(b);
    };
    auto rest_degree = [&](Vertex v) {
      int d = 0;
      for (Vertex w : g_.neighbors(v)) d += usable(v, w) ? 1 : 0;
      return d;
    };
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    auto walk = [&](Vertex start) {
      std::vector<Vertex> seq{start};
      done[static_cast<std::size_t>(start)] = 1;
      Vertex prev = -1, cur = start;
      while (true) {
        Vertex next = -1;
        for (Vertex w : g_.neighbors(cur)) {
          if (w == prev || !usable(cur, w)) continue;
          if (next == -1 || w < next) next = w;
        }
        if (next == -1) break;
        seq.push_back(next);
        if (next == start || done[static_cast<std::size_t>(next)]) break;
        done[static_cast<std::size_t>(next)] = 1;
        prev = cur;
        cur = next;
      }
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        const Vertex a = seq[i], b = seq[i + 1];
        plan(a, b, cover(a) > 0 ? b : a);
      }
    };
    for (Vertex v = 0; v < n; ++v) {
      if (!done[static_cast<std::size_t>(v)] && !exposed(v) && rest_degree(v) == 1) walk(v);
    }
    for (Vertex v = 0; v < n; ++v) {
      if (!done[static_cast<std::size_t>(v)] && !exposed(v) && rest_degree(v) == 2) walk(v);
    }
  }

  // Edges at the exposed vertices: the exposed vertex must get a red
  // neighbour, unless every edge at it has one subdivision vertex; then those
  // go red and the exposed vertex blue. An exposed leaf left single turns blue
  // at the end, so its edge serves the other end.
  void plan_at_exposed() {
    for (Vertex z = 0; z < g_.vertex_count(); ++z) {
      if (!exposed(z) || small_[static_cast<std::size_t>(z)]) continue;
      bool all_single = true;
      for (Vertex w : g_.neighbors(z)) all_single = all_single && count(Edge(z, w)) == 1;
      if (all_single) {
        for (Vertex w : g_.neighbors(z)) {
          c_[path_from(sg_, z, w)[1]] = Color::Red;
          ++cover(w);
        }
        c_[z] = Color::Blue;
        continue;
      }
      for (Vertex w : g_.neighbors(z)) {
        if (grant_of(count(Edge(z, w))) == Grant::Both) {
          plan(z, w, -1);
        }
      }
      for (Vertex w : g_.neighbors(z)) {
        const Grant gr = grant_of(count(Edge(z, w)));
        if (gr == Grant::None) plan(z, w, -1);
        if (gr == Grant::Flexible) plan(z, w, cover(z) > 0 || g_.degree(z) == 1 ? w : z);
      }
    }
  }

  // Leaves as few red singletons as possible: a base vertex without a red
  // neighbour takes the K2 of a flexible edge from its other end when that
  // end keeps one, along augmenting paths. Leaves are skipped: a single leaf
  // turns blue at the end.
  void rebalance() {
    std::vector<std::vector<int>> flexible_at(static_cast<std::size_t>(g_.vertex_count()));
    for (int i : planned_) {
      if (k2_at_[static_cast<std::size_t>(i)] < 0) continue;
      const Edge e = sg_.base_edges()[static_cast<std::size_t>(i)];
      flexible_at[static_cast<std::size_t>(e.u)].push_back(i);
      flexible_at[static_cast<std::size_t>(e.v)].push_back(i);
    }
    std::vector<char> visited;
    auto augment = [&](auto&& self, Vertex v) -> bool {
      for (int i : flexible_at[static_cast<std::size_t>(v)]) {
        const Vertex at = k2_at_[static_cast<std::size_t>(i)];
        if (at == v || visited[static_cast<std::size_t>(i)]) continue;
        visited[static_cast<std::size_t>(i)] = 1;
        if (cover(at) >= 2 || self(self, at)) {
          --cover(at);
          ++cover(v);
          k2_at_[static_cast<std::size_t>(i)] = v;
          return true;
        }
      }
      return false;
    };
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (cover(v) > 0 || g_.degree(v) < 2 || small_[static_cast<std::size_t>(v)] || c_.is_blue(v)) continue;
      visited.assign(sg_.base_edges().size(), 0);
      augment(augment, v);
    }
  }

  void paint_edge(Vertex a, Vertex b, Vertex k2_at) {
    const int cnt = count(Edge(a, b));
    const int k = cnt + 2;
    switch (grant_of(cnt)) {
      case Grant::None:
        paint(c_, sg_, a, b, path_pattern(k, PatternPurpose::EndpointsSingletonRed).colors);
        return;
      case Grant::Both:
        if (cnt > 0) paint(c_, sg_, a, b, path_pattern(k, PatternPurpose::EndpointsInRedK2).colors);
        return;
      case Grant::Flexible:
        paint(c_, sg_, k2_at, k2_at == a ? b : a, path_pattern(k, PatternPurpose::MixedSingletonAndK2).colors);
        return;
    }
  }

  void paint_planned() {
    for (int i : planned_) {
      const Edge e = sg_.base_edges()[static_cast<std::size_t>(i)];
      paint_edge(e.u, e.v, k2_at_[static_cast<std::size_t>(i)]);
    }
  }

  bool singleton(Vertex v) const {
    if (!c_.is_red(v)) return false;
    for (Vertex w : h_.neighbors(v)) {
      if (c_.is_red(w)) return false;
    }
    return true;
  }

  // The neighbour of u on the expanded edge towards w.
  Vertex near(Vertex u, Vertex w) const { return path_from(sg_, u, w)[1]; }

  // Whether u can turn blue, with the edge to `skip` (if any) about to give
  // u a red neighbour: one-vertex edges to red base vertices turn red, every
  // other blue neighbour counts towards u's blue degree.
  bool feasible_blue(Vertex u, Vertex skip) const {
    int blue = 0;
    for (Vertex w : g_.neighbors(u)) {
      if (w == skip) continue;
      const Vertex t = near(u, w);
      if (c_.is_red(t)) continue;
      if (count(Edge(u, w)) == 1) {
        if (c_.is_blue(w)) return false;
        continue;
      }
      if (count(Edge(u, w)) == 0) return false;
      ++blue;
    }
    return blue <= 1;
  }

  // Turns u blue; every blue one-vertex edge from u to a red base vertex
  // turns red (the recolouring of y).
  void make_blue(Vertex u, Vertex skip) {
    c_[u] = Color::Blue;
    for (Vertex w : g_.neighbors(u)) {
      if (w == skip || count(Edge(u, w)) != 1) continue;
      const Vertex y = near(u, w);
      if (c_.is_blue(y) && c_.is_red(w)) c_[y] = Color::Red;
    }
  }

  std::optional<Vertex> pick_blue_end(Vertex a, Vertex b) const {
    std::array<Vertex, 2> order{a, b};
    std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return g_.degree(x) < g_.degree(y); });
    for (Vertex x : order) {
      if (feasible_blue(x, x == a ? b : a)) return x;
    }
    return std::nullopt;
  }

  // A single v takes the red K2 of a flexible edge off the matching whose
  // K2 end keeps another red neighbour.
  bool steal(Vertex v) {
    for (Vertex w : g_.neighbors(v)) {
      const int i = index(v, w);
      if (k2_at_[static_cast<std::size_t>(i)] != w || in_matching(v, w)) continue;
      int others = 0;
      for (Vertex t : h_.neighbors(w)) others += c_.is_red(t) && t != near(w, v) ? 1 : 0;
      if (others == 0) continue;
      k2_at_[static_cast<std::size_t>(i)] = v;
      paint_edge(v, w, v);
      return true;
    }
    return false;
  }

  // The four single-vertex cases on a matching edge; false if none applies.
  bool matching_case(const Edge& e) {
    const int cnt = count(e);
    const bool su = singleton(e.u), sv = singleton(e.v);
    if (cnt == 1 && su && sv) {
      // Both ends single, one subdivision vertex x: x red, one end blue.
      const auto u = pick_blue_end(e.u, e.v);
      if (!u) return false;
      const Vertex v = *u == e.u ? e.v : e.u;
      c_[near(*u, v)] = Color::Red;
      make_blue(*u, v);
      return true;
    }
    if (cnt == 5 && su && sv) {
      const auto u = pick_blue_end(e.u, e.v);
      if (!u) return false;
      const Vertex v = *u == e.u ? e.v : e.u;
      paint(c_, sg_, *u, v, "brrbbrr");
      make_blue(*u, v);
      return true;
    }
    if (cnt == 2 && su && sv) {
      if (!feasible_blue(e.u, e.v) || !feasible_blue(e.v, e.u)) return false;
      paint(c_, sg_, e.u, e.v, "brrb");
      make_blue(e.u, e.v);
      make_blue(e.v, e.u);
      return true;
    }
    if (cnt == 1 && (su || sv)) {
      // One end single: x red joins the other end's star, the single end
      // turns blue.
      const Vertex v = su ? e.u : e.v, u = su ? e.v : e.u;
      if (!feasible_blue(v, u)) return false;
      c_[near(u, v)] = Color::Red;
      make_blue(v, u);
      return true;
    }
    paint_edge(e.u, e.v, su || !sv ? e.u : e.v);
    return true;
  }

  void color_matching_edges() {
    for (const Edge& e : matching_.edges()) {
      if (small_[static_cast<std::size_t>(e.u)]) continue;
      bool done = matching_case(e);
      for (Vertex x : {e.u, e.v}) {
        if (!done && singleton(x) && steal(x)) done = matching_case(e);
      }
      if (!done) {
        const bool su = singleton(e.u);
        paint_edge(e.u, e.v, su || !singleton(e.v) ? e.u : e.v);
      }
    }
  }

  const SubdividedGraph& sg_;
  const Graph& g_;
  const Graph& h_;
  Coloring c_;
  Matching matching_;
  std::vector<char> small_;
  std::vector<char> exposed_;
  std::vector<int> cover_;
  std::vector<Vertex> k2_at_;
  std::vector<int> planned_;
};

}  // namespace

Coloring solve_genuine_subdivision(const SubdividedGraph& sg) { return GenuineSolver(sg).run(); }

}  // namespace crumby
