#include "crumby/matching.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "crumby/error.hpp"

namespace crumby {

void Matching::add(Vertex a, Vertex b) {
  if (covers(a) || covers(b)) throw InvariantViolation("matching: vertex already covered");
  mate_[static_cast<std::size_t>(a)] = b;
  mate_[static_cast<std::size_t>(b)] = a;
}

int Matching::size() const {
  int covered = 0;
  for (Vertex m : mate_) covered += m >= 0 ? 1 : 0;
  return covered / 2;
}

std::vector<Edge> Matching::edges() const {
  std::vector<Edge> out;
  for (std::size_t v = 0; v < mate_.size(); ++v) {
    if (mate_[v] > static_cast<Vertex>(v)) out.emplace_back(static_cast<Vertex>(v), mate_[v]);
  }
  return out;
}

bool is_matching(const Graph& g, const Matching& m) {
  if (static_cast<int>(m.mates().size()) != g.vertex_count()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Vertex w = m.mate(v);
    if (w < 0) continue;
    if (w >= g.vertex_count() || m.mate(w) != v || !g.has_edge(v, w)) return false;
  }
  return true;
}

namespace {

// Alternating-forest machinery of the blossom algorithm. `grow` builds the
// forest from the given roots; with a single root it finds an augmenting
// path, with all exposed vertices as roots under a maximum matching it ends
// in the Gallai-Edmonds forest.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g),
        n_(g.vertex_count()),
        match_(static_cast<std::size_t>(n_), -1),
        p_(static_cast<std::size_t>(n_)),
        base_(static_cast<std::size_t>(n_)),
        used_(static_cast<std::size_t>(n_)),
        blossom_(static_cast<std::size_t>(n_)) {}

  void augment_all() {
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[static_cast<std::size_t>(v)] != -1) continue;
      Vertex end = grow({v});
      while (end != -1) {
        const Vertex pv = p_[static_cast<std::size_t>(end)];
        const Vertex ppv = match_[static_cast<std::size_t>(pv)];
        match_[static_cast<std::size_t>(end)] = pv;
        match_[static_cast<std::size_t>(pv)] = end;
        end = ppv;
      }
    }
  }

  void set_matching(const Matching& m) { match_ = m.mates(); }

  // Returns the exposed end of an augmenting path found from the roots, or -1.
  Vertex grow(const std::vector<Vertex>& roots) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(p_.begin(), p_.end(), -1);
    for (Vertex i = 0; i < n_; ++i) base_[static_cast<std::size_t>(i)] = i;
    std::deque<Vertex> queue;
    for (Vertex r : roots) {
      used_[static_cast<std::size_t>(r)] = 1;
      queue.push_back(r);
    }
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
            match_[static_cast<std::size_t>(v)] == to) {
          continue;
        }
        const bool to_outer = used_[static_cast<std::size_t>(to)] ||
                              (match_[static_cast<std::size_t>(to)] != -1 &&
                               p_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] != -1);
        if (to_outer) {
          const Vertex cur = lca(v, to);
          if (cur == -1) {
            // Two trees meet: augmenting path between two roots.
            if (roots.size() == 1) throw InvariantViolation("blossom: single-root forest met a second tree");
            throw InvariantViolation("blossom: matching is not maximum");
          }
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
              base_[static_cast<std::size_t>(i)] = cur;
              if (!used_[static_cast<std::size_t>(i)]) {
                used_[static_cast<std::size_t>(i)] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (p_[static_cast<std::size_t>(to)] == -1) {
          p_[static_cast<std::size_t>(to)] = v;
          if (match_[static_cast<std::size_t>(to)] == -1) return to;
          const Vertex m = match_[static_cast<std::size_t>(to)];
          used_[static_cast<std::size_t>(m)] = 1;
          queue.push_back(m);
        }
      }
    }
    return -1;
  }

  Matching matching() const {
    Matching m(n_);
    for (Vertex v = 0; v < n_; ++v) {
      const Vertex w = match_[static_cast<std::size_t>(v)];
      if (w > v) m.add(v, w);
    }
    return m;
  }

  bool outer(Vertex v) const { return used_[static_cast<std::size_t>(v)] != 0; }
  bool inner(Vertex v) const { return !outer(v) && p_[static_cast<std::size_t>(v)] != -1; }

 private:
  Vertex lca(Vertex a, Vertex b) const {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    while (true) {
      a = base_[static_cast<std::size_t>(a)];
      seen[static_cast<std::size_t>(a)] = 1;
      if (match_[static_cast<std::size_t>(a)] == -1) break;
      a = p_[static_cast<std::size_t>(match_[static_cast<std::size_t>(a)])];
    }
    while (true) {
      b = base_[static_cast<std::size_t>(b)];
      if (seen[static_cast<std::size_t>(b)]) return b;
      if (match_[static_cast<std::size_t>(b)] == -1) return -1;
      b = p_[static_cast<std::size_t>(match_[static_cast<std::size_t>(b)])];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[static_cast<std::size_t>(v)] != b) {
      const Vertex m = match_[static_cast<std::size_t>(v)];
      blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
      blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(m)])] = 1;
      p_[static_cast<std::size_t>(v)] = child;
      child = m;
      v = p_[static_cast<std::size_t>(m)];
    }
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> match_, p_, base_;
  std::vector<char> used_, blossom_;
};

Matching induced_perfect_matching(const Graph& g, const std::vector<Vertex>& vertices, const char* what) {
  const Graph h = induced_subgraph(g, vertices);
  const Matching local = maximum_matching(h);
  if (2 * local.size() != h.vertex_count()) throw InvariantViolation(std::string("no perfect matching in ") + what);
  Matching m(g.vertex_count());
  for (const Edge& e : local.edges()) m.add(vertices[static_cast<std::size_t>(e.u)], vertices[static_cast<std::size_t>(e.v)]);
  return m;
}

std::vector<Vertex> without(const std::vector<Vertex>& vs, Vertex x) {
  std::vector<Vertex> out;
  for (Vertex v : vs) {
    if (v != x) out.push_back(v);
  }
  return out;
}

}  // namespace

Matching maximum_matching(const Graph& g) {
  Blossom b(g);
  b.augment_all();
  return b.matching();
}

bool hypomatchable(const Graph& g) {
  std::vector<Vertex> all(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    const Graph h = induced_subgraph(g, without(all, x));
    if (2 * maximum_matching(h).size() != h.vertex_count()) return false;
  }
  return true;
}

std::map<Vertex, int> hall_matching_onto_B(const Graph& g, const EGDecomposition& d) {
  const int comps = static_cast<int>(d.odd_components.size());
  std::map<Vertex, std::vector<int>> options;
  for (Vertex b : d.B) {
    std::set<int> ids;
    for (Vertex w : g.neighbors(b)) {
      const int c = d.odd_component_of[static_cast<std::size_t>(w)];
      if (c >= 0) ids.insert(c);
    }
    options[b].assign(ids.begin(), ids.end());
  }
  std::vector<Vertex> owner(static_cast<std::size_t>(comps), -1);
  std::map<Vertex, int> assigned;

  std::vector<char> visited;
  auto try_kuhn = [&](auto&& self, Vertex b) -> bool {
    for (int c : options[b]) {
      if (visited[static_cast<std::size_t>(c)]) continue;
      visited[static_cast<std::size_t>(c)] = 1;
      const Vertex holder = owner[static_cast<std::size_t>(c)];
      if (holder == -1 || self(self, holder)) {
        owner[static_cast<std::size_t>(c)] = b;
        assigned[b] = c;
        return true;
      }
    }
    return false;
  };
  for (Vertex b : d.B) {
    visited.assign(static_cast<std::size_t>(comps), 0);
    if (!try_kuhn(try_kuhn, b)) throw InvariantViolation("Hall condition fails: B vertex " + std::to_string(b) + " unmatched");
  }

  // Saturate single-vertex components where possible: find an alternating
  // path s - b1 - c1 - b2 - ... ending at a component whose loss of its B
  // partner uncovers no single-vertex component, and shift along it.
  auto is_single = [&](int c) { return d.odd_components[static_cast<std::size_t>(c)].size() == 1; };
  std::map<int, std::vector<Vertex>> reverse;
  for (const auto& [b, ids] : options) {
    for (int c : ids) reverse[c].push_back(b);
  }
  for (int s = 0; s < comps; ++s) {
    if (!is_single(s) || owner[static_cast<std::size_t>(s)] != -1) continue;
    std::map<int, std::pair<int, Vertex>> parent;  // comp -> (previous comp, B vertex moving to it)
    std::deque<int> queue{s};
    std::set<int> seen{s};
    int end = -1;
    while (!queue.empty() && end == -1) {
      const int c = queue.front();
      queue.pop_front();
      for (Vertex b : reverse[c]) {
        const int next = assigned.at(b);
        if (!seen.insert(next).second) continue;
        parent[next] = {c, b};
        if (!is_single(next)) {
          end = next;
          break;
        }
        queue.push_back(next);
      }
    }
    if (end == -1) continue;
    int c = end;
    owner[static_cast<std::size_t>(end)] = -1;
    while (c != s) {
      const auto [prev, b] = parent.at(c);
      assigned[b] = prev;
      owner[static_cast<std::size_t>(prev)] = b;
      c = prev;
    }
  }
  return assigned;
}

EGDecomposition edmonds_gallai(const Graph& g) {
  const int n = g.vertex_count();
  EGDecomposition d;
  const Matching maximum = maximum_matching(g);

  Blossom forest(g);
  forest.set_matching(maximum);
  std::vector<Vertex> roots;
  for (Vertex v = 0; v < n; ++v) {
    if (!maximum.covers(v)) roots.push_back(v);
  }
  if (!roots.empty() && forest.grow(roots) != -1) throw InvariantViolation("maximum matching admits an augmenting path");

  std::vector<char> in_a(static_cast<std::size_t>(n), 0), in_b(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    if (roots.empty()) break;
    if (forest.outer(v)) {
      in_a[static_cast<std::size_t>(v)] = 1;
      d.A.push_back(v);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (in_a[static_cast<std::size_t>(v)]) continue;
    bool adjacent = false;
    for (Vertex w : g.neighbors(v)) adjacent = adjacent || in_a[static_cast<std::size_t>(w)];
    if (adjacent) {
      in_b[static_cast<std::size_t>(v)] = 1;
      d.B.push_back(v);
    } else {
      d.C.push_back(v);
    }
  }

  // Components of G - B, split by where they live.
  d.odd_component_of.assign(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex s = 0; s < n; ++s) {
    if (in_b[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!in_b[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    if (in_a[static_cast<std::size_t>(s)]) {
      for (Vertex v : comp) d.odd_component_of[static_cast<std::size_t>(v)] = static_cast<int>(d.odd_components.size());
      d.odd_components.push_back(std::move(comp));
    } else {
      d.even_components.push_back(std::move(comp));
    }
  }

  d.contracted_matching = hall_matching_onto_B(g, d);

  // Structured maximum matching.
  d.matching = Matching(n);
  d.roles.assign(d.odd_components.size(), {});
  for (const auto& [b, c] : d.contracted_matching) {
    const auto& comp = d.odd_components[static_cast<std::size_t>(c)];
    Vertex entry = -1;
    for (Vertex a : comp) {
      if (g.has_edge(a, b)) {
        entry = a;
        break;
      }
    }
    d.matching.add(b, entry);
    d.roles[static_cast<std::size_t>(c)] = {true, b, entry, -1};
  }
  auto merge = [&](const Matching& part) {
    for (const Edge& e : part.edges()) d.matching.add(e.u, e.v);
  };
  for (std::size_t c = 0; c < d.odd_components.size(); ++c) {
    const auto& comp = d.odd_components[c];
    auto& role = d.roles[c];
    if (!role.saturated) role.exposed = comp.front();
    const Vertex missing = role.saturated ? role.entry : role.exposed;
    merge(induced_perfect_matching(g, without(comp, missing), "odd component minus a vertex"));
  }
  for (const auto& comp : d.even_components) merge(induced_perfect_matching(g, comp, "even component"));

  validate_decomposition(g, d);
  return d;
}

void validate_decomposition(const Graph& g, const EGDecomposition& d) {
  const int n = g.vertex_count();
  auto fail = [](const std::string& what) { throw InvariantViolation("Edmonds-Gallai: " + what); };
  std::vector<int> part(static_cast<std::size_t>(n), -1);
  for (Vertex v : d.A) part[static_cast<std::size_t>(v)] = 0;
  for (Vertex v : d.B) {
    if (part[static_cast<std::size_t>(v)] != -1) fail("A and B overlap");
    part[static_cast<std::size_t>(v)] = 1;
  }
  for (Vertex v : d.C) {
    if (part[static_cast<std::size_t>(v)] != -1) fail("C overlaps A or B");
    part[static_cast<std::size_t>(v)] = 2;
  }
  if (std::count(part.begin(), part.end(), -1) != 0) fail("A, B, C do not cover V");
  for (Vertex v = 0; v < n; ++v) {
    bool touches_a = false;
    for (Vertex w : g.neighbors(v)) touches_a = touches_a || part[static_cast<std::size_t>(w)] == 0;
    const bool should_be_b = part[static_cast<std::size_t>(v)] != 0 && touches_a;
    if (should_be_b != (part[static_cast<std::size_t>(v)] == 1)) fail("B is not N(A)");
  }
  for (const auto& comp : d.odd_components) {
    if (comp.size() % 2 == 0) fail("odd component of even size");
    for (Vertex v : comp) {
      if (part[static_cast<std::size_t>(v)] != 0) fail("odd component outside A");
    }
    if (!hypomatchable(induced_subgraph(g, comp))) fail("odd component not factor-critical");
  }
  for (const auto& comp : d.even_components) {
    if (comp.size() % 2 != 0) fail("even component of odd size");
    for (Vertex v : comp) {
      if (part[static_cast<std::size_t>(v)] != 2) fail("even component outside C");
    }
    const Graph h = induced_subgraph(g, comp);
    if (2 * maximum_matching(h).size() != h.vertex_count()) fail("even component without perfect matching");
  }
  std::set<int> used;
  for (Vertex b : d.B) {
    auto it = d.contracted_matching.find(b);
    if (it == d.contracted_matching.end()) fail("contracted matching misses a B vertex");
    if (!used.insert(it->second).second) fail("contracted matching not injective");
    bool joined = false;
    for (Vertex w : g.neighbors(b)) joined = joined || d.odd_component_of[static_cast<std::size_t>(w)] == it->second;
    if (!joined) fail("contracted matching pair without an edge");
  }
  if (!is_matching(g, d.matching)) fail("structured matching is not a matching");
  const int deficiency = static_cast<int>(d.odd_components.size()) - static_cast<int>(d.B.size());
  if (2 * d.matching.size() != n - deficiency) fail("matching size does not meet the Tutte-Berge bound");
  for (std::size_t c = 0; c < d.roles.size(); ++c) {
    const auto& r = d.roles[c];
    if (!r.saturated && d.matching.covers(r.exposed)) fail("exposed vertex is covered");
  }
}

std::string EGDecomposition::to_text() const {
  std::ostringstream out;
  auto list = [&](const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
  };
  out << "A: ";
  list(A);
  out << "\nB: ";
  list(B);
  out << "\nC: ";
  list(C);
  out << '\n';
  for (std::size_t i = 0; i < odd_components.size(); ++i) {
    out << "odd " << i << ": ";
    list(odd_components[i]);
    const auto& r = roles[i];
    if (r.saturated) {
      out << " (matched from " << r.matched_from << " at " << r.entry << ")";
    } else {
      out << " (exposed " << r.exposed << ")";
    }
    out << '\n';
  }
  for (std::size_t i = 0; i < even_components.size(); ++i) {
    out << "even " << i << ": ";
    list(even_components[i]);
    out << '\n';
  }
  out << "matching:";
  for (const Edge& e : matching.edges()) out << ' ' << e.u << '-' << e.v;
  out << '\n';
  return out.str();
}

}  // namespace crumby
