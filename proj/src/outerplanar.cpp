#include "crumby/outerplanar.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "crumby/error.hpp"
#include "crumby/fixtures.hpp"
#include "crumby/trees.hpp"
#include "crumby/verifier.hpp"

namespace crumby {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

// g plus, optionally, an apex vertex n joined to every vertex.
BoostGraph to_boost(const Graph& g, bool apex) {
  const int n = g.vertex_count();
  BoostGraph b(static_cast<std::size_t>(n + (apex ? 1 : 0)));
  for (const Edge& e : g.edges()) boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), b);
  if (apex) {
    for (Vertex v = 0; v < n; ++v) boost::add_edge(static_cast<std::size_t>(n), static_cast<std::size_t>(v), b);
  }
  int index = 0;
  for (auto [it, end] = boost::edges(b); it != end; ++it) boost::put(boost::edge_index, b, *it, index++);
  return b;
}

std::vector<Vertex> cut_vertices(const Graph& g) {
  const BoostGraph b = to_boost(g, false);
  std::vector<std::size_t> cuts;
  boost::articulation_points(b, std::back_inserter(cuts));
  std::vector<Vertex> out(cuts.begin(), cuts.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Cyclic order of the vertices around the apex of a planar embedding of g
// plus an apex, or the vertex set of a Kuratowski subgraph without the apex.
struct ApexResult {
  bool planar = false;
  std::vector<Vertex> rotation;
  std::vector<Vertex> witness;
};

ApexResult apex_planarity(const Graph& g) {
  const int n = g.vertex_count();
  BoostGraph b = to_boost(g, true);
  std::vector<std::vector<BoostEdge>> storage(boost::num_vertices(b));
  auto embedding = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, b));
  ApexResult out;
  if (boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = b,
                                          boost::boyer_myrvold_params::embedding = embedding)) {
    out.planar = true;
    for (const BoostEdge& e : storage[static_cast<std::size_t>(n)]) {
      const auto s = boost::source(e, b), t = boost::target(e, b);
      out.rotation.push_back(static_cast<Vertex>(s == static_cast<std::size_t>(n) ? t : s));
    }
    return out;
  }
  std::vector<BoostEdge> kuratowski;
  boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = b,
                                      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
  std::set<Vertex> vs;
  for (const BoostEdge& e : kuratowski) {
    for (auto v : {boost::source(e, b), boost::target(e, b)}) {
      if (v != static_cast<std::size_t>(n)) vs.insert(static_cast<Vertex>(v));
    }
  }
  out.witness.assign(vs.begin(), vs.end());
  return out;
}

std::string list_text(const std::vector<Vertex>& vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
  return out.str();
}

// Inner faces of a 2-connected outerplanar graph drawn with the outer cycle
// on a circle: the face left of u->v continues along the neighbour of v that
// precedes u in v's rotation (neighbours ordered by position after v).
std::vector<std::vector<Vertex>> inner_faces(const Graph& g, const std::vector<Vertex>& cycle) {
  const int n = g.vertex_count();
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(cycle[static_cast<std::size_t>(i)])] = i;
  auto offset = [&](Vertex from, Vertex to) {
    return ((pos[static_cast<std::size_t>(to)] - pos[static_cast<std::size_t>(from)]) % n + n) % n;
  };
  std::vector<std::vector<Vertex>> rotation(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    auto& r = rotation[static_cast<std::size_t>(v)];
    r.assign(g.neighbors(v).begin(), g.neighbors(v).end());
    std::sort(r.begin(), r.end(), [&](Vertex a, Vertex b) { return offset(v, a) < offset(v, b); });
  }
  std::set<std::pair<Vertex, Vertex>> used;
  std::vector<std::vector<Vertex>> faces;
  auto next_of = [&](Vertex u, Vertex v) {
    const auto& r = rotation[static_cast<std::size_t>(v)];
    const auto it = std::find(r.begin(), r.end(), u);
    return it == r.begin() ? r.back() : *(it - 1);
  };
  for (int i = 0; i < n; ++i) {
    const Vertex a = cycle[static_cast<std::size_t>(i)];
    for (Vertex b : rotation[static_cast<std::size_t>(a)]) {
      // Skip directed edges running backwards along the outer cycle.
      if (offset(a, b) == n - 1 || used.count({a, b})) continue;
      std::vector<Vertex> face;
      Vertex u = a, v = b;
      while (used.insert({u, v}).second) {
        face.push_back(u);
        const Vertex w = next_of(u, v);
        u = v;
        v = w;
      }
      faces.push_back(std::move(face));
    }
  }
  for (auto& f : faces) std::rotate(f.begin(), std::min_element(f.begin(), f.end()), f.end());
  std::sort(faces.begin(), faces.end());
  return faces;
}

// The path from a to b around the face that avoids the edge ab.
std::vector<Vertex> face_path(const std::vector<Vertex>& face, Vertex a, Vertex b) {
  const std::size_t k = face.size();
  const std::size_t ia = static_cast<std::size_t>(std::find(face.begin(), face.end(), a) - face.begin());
  const bool forward = face[(ia + 1) % k] != b;
  std::vector<Vertex> path;
  for (std::size_t step = 0; step < k; ++step) {
    const Vertex v = face[forward ? (ia + step) % k : (ia + k - step) % k];
    path.push_back(v);
    if (v == b) break;
  }
  return path;
}

std::string cycle_pattern(int k) {
  const auto& cycles = fixtures().cycles;
  if (const auto it = cycles.find(k); it != cycles.end()) return it->second;
  if (k < 3) throw Error("cycles need k >= 3");
  return "rrb" + cycle_pattern(k - 3);
}

std::string merged_pattern(int m) {
  const auto& merged = fixtures().merged;
  if (const auto it = merged.find(m); it != merged.end()) return it->second;
  return merged_pattern(m - 3) + "brr";
}

// Colours of w_1..w_k (part 'w') or z_1..z_l (part 'z') for the two-face start.
std::string two_face_part(char part, int k, int l) {
  const int r = (k - 1) % 3 + 1, s = (l - 1) % 3 + 1;
  const int rep = part == 'w' ? (k - r) / 3 : (l - s) / 3;
  for (const TwoFaceRule& rule : fixtures().two_faces) {
    if (rule.part != part) continue;
    if (rule.k_residue != 0 && rule.k_residue != r) continue;
    if (rule.l_residue != 0 && rule.l_residue != s) continue;
    if (rep < rule.min_rep || (rule.max_rep >= 0 && rep > rule.max_rep)) continue;
    return expand_template(rule.templ, rep);
  }
  throw InvariantViolation("two_faces fixture has no rule for k=" + std::to_string(k) + " l=" + std::to_string(l));
}

class EarSolver {
 public:
  EarSolver(const Graph& g, const EarDecomposition& d)
      : g_(g), dec_(d), c_(g.vertex_count()), in_(static_cast<std::size_t>(g.vertex_count()), 0),
        done_(d.ears.size(), 0) {
    for (std::size_t i = 0; i < d.ears.size(); ++i) ear_of_chord_[Edge(d.ears[i].x, d.ears[i].y)] = static_cast<int>(i);
  }

  Coloring run(Vertex v, Color color) {
    std::size_t first = 0;
    if (g_.degree(v) == 2) {
      start_cycle(color);
    } else {
      start_two_faces(v, color);
      first = 1;
    }
    check("start");
    for (std::size_t i = first; i < dec_.ears.size(); ++i) {
      if (done_[i]) continue;
      const Ear& ear = dec_.ears[i];
      done_[i] = 1;
      add_ear(ear.x, ear.internal, ear.y, true);
      check(("ear " + std::to_string(i + 1)).c_str());
    }
    if (c_[v] != color) throw InvariantViolation("prescribed vertex changed colour");
    const auto report = verify_crumby(g_, c_);
    if (!report.ok) throw InvariantViolation("final colouring is not crumby: " + report.to_text());
    return c_;
  }

 private:
  void set(Vertex v, char ch) {
    c_[v] = ch == 'r' ? Color::Red : Color::Blue;
    in_[static_cast<std::size_t>(v)] = 1;
  }
  bool in(Vertex v) const { return in_[static_cast<std::size_t>(v)] != 0; }

  bool ends_red_p3(Vertex x) const {
    if (!c_.is_red(x)) return false;
    for (Vertex a : g_.neighbors(x)) {
      if (!in(a) || !c_.is_red(a)) continue;
      for (Vertex b : g_.neighbors(a)) {
        if (b != x && in(b) && c_.is_red(b)) return true;
      }
    }
    return false;
  }

  bool blue_single(Vertex y) const {
    for (Vertex w : g_.neighbors(y)) {
      if (in(w) && c_.is_blue(w)) return false;
    }
    return true;
  }

  void start_cycle(Color color) {
    std::vector<Vertex> face = dec_.initial;  // starts at v
    const int k = static_cast<int>(face.size());
    const std::string p = cycle_pattern(k);
    if (k == 5 && color == Color::Red) {
      // Blue pair on a face edge that is not a chord, away from v.
      for (int i = 1; i + 1 < k; ++i) {
        const Vertex a = face[static_cast<std::size_t>(i)], b = face[static_cast<std::size_t>(i + 1)];
        if (ear_of_chord_.count(Edge(a, b))) continue;
        for (Vertex w : face) set(w, w == a || w == b ? 'b' : 'r');
        return;
      }
      throw InvariantViolation("C5 start: every edge away from v is a chord");
    }
    const std::size_t j = p.find(to_char(color));
    for (std::size_t i = 0; i < face.size(); ++i) set(face[i], p[(i + j) % p.size()]);
  }

  void start_two_faces(Vertex v, Color color) {
    const Ear& first = dec_.ears.front();
    done_[0] = 1;
    const Vertex u = first.x == v ? first.y : first.x;
    const std::vector<Vertex> w_path = face_path(dec_.initial, u, v);
    std::vector<Vertex> z_path{u};
    z_path.insert(z_path.end(), first.internal.begin(), first.internal.end());
    z_path.push_back(v);
    if (first.x != u) std::reverse(z_path.begin() + 1, z_path.end() - 1);
    const int k = static_cast<int>(w_path.size()) - 2, l = static_cast<int>(z_path.size()) - 2;
    if (k == 2 && l == 2) {
      const std::string& p = fixtures().two_squares[color == Color::Red ? 0 : 1];
      if (p.size() != 6) throw InvariantViolation("two_squares fixture is missing");
      const std::array<Vertex, 6> order{u, w_path[1], w_path[2], v, z_path[1], z_path[2]};
      for (std::size_t i = 0; i < 6; ++i) set(order[i], p[i]);
      return;
    }
    // The table colours the blue end u and the red end v; when v is to be
    // blue the two ends swap roles and both paths are read backwards.
    std::vector<Vertex> w = w_path, z = z_path;
    if (color == Color::Blue) {
      std::reverse(w.begin(), w.end());
      std::reverse(z.begin(), z.end());
    }
    const std::string wp = two_face_part('w', k, l), zp = two_face_part('z', k, l);
    if (static_cast<int>(wp.size()) != k || static_cast<int>(zp.size()) != l) {
      throw InvariantViolation("two_faces rule length mismatch at k=" + std::to_string(k) + " l=" + std::to_string(l));
    }
    set(w.front(), 'b');
    set(w.back(), 'r');
    for (int i = 0; i < k; ++i) set(w[static_cast<std::size_t>(i + 1)], wp[static_cast<std::size_t>(i)]);
    for (int i = 0; i < l; ++i) set(z[static_cast<std::size_t>(i + 1)], zp[static_cast<std::size_t>(i)]);
  }

  // Unprocessed ear hanging on the chord ab, if any.
  int pending_ear(Vertex a, Vertex b) const {
    const auto it = ear_of_chord_.find(Edge(a, b));
    if (it == ear_of_chord_.end() || done_[static_cast<std::size_t>(it->second)]) return -1;
    return it->second;
  }

  const EarRule* find_rule(int l, bool rr, bool x_end, bool y_single, bool merge) const {
    for (const EarRule& rule : fixtures().ears) {
      if (rule.length != l || rule.rr != rr) continue;
      if ((rule.x == EndStatus::End && !x_end) || (rule.x == EndStatus::NotEnd && x_end)) continue;
      if ((rule.y == BlueStatus::Single && !y_single) || (rule.y == BlueStatus::Pair && y_single)) continue;
      if (rule.merged && !merge) continue;
      return &rule;
    }
    return nullptr;
  }

  // `outer` is false for the tail of a long ear, whose x is z_3 of the
  // enclosing ear and must keep that role.
  void add_ear(Vertex x, std::vector<Vertex> z, Vertex y, bool outer) {
    if (c_.is_blue(x) && c_.is_blue(y)) throw InvariantViolation(snapshot("ear with two blue ends"));
    if (c_.is_blue(x)) {
      std::swap(x, y);
      std::reverse(z.begin(), z.end());
    }
    const int l = static_cast<int>(z.size());
    if (l >= 7) {
      set(z[0], 'b');
      set(z[1], 'r');
      set(z[2], 'r');
      add_ear(z[2], std::vector<Vertex>(z.begin() + 3, z.end()), y, false);
      return;
    }
    const bool rr = c_.is_red(y);
    const EarRule* rule = nullptr;
    for (int attempt = 0; attempt < 2 && !rule; ++attempt) {
      if (attempt == 1) {
        if (!rr || !outer) break;
        std::swap(x, y);
        std::reverse(z.begin(), z.end());
      }
      const bool merge = l == 3 && pending_ear(z[1], z[2]) >= 0;
      rule = find_rule(l, rr, ends_red_p3(x), c_.is_blue(y) && blue_single(y), merge);
    }
    if (!rule) throw InvariantViolation(snapshot("no ear rule for l=" + std::to_string(l)));
    set(x, rule->colors.front());
    for (int i = 0; i < l; ++i) set(z[static_cast<std::size_t>(i)], rule->colors[static_cast<std::size_t>(i + 1)]);
    set(y, rule->colors.back());
    if (rule->merged) {
      const int j = pending_ear(z[1], z[2]);
      const Ear& second = dec_.ears[static_cast<std::size_t>(j)];
      done_[static_cast<std::size_t>(j)] = 1;
      std::vector<Vertex> w = second.internal;
      if (second.x != z[1]) std::reverse(w.begin(), w.end());
      const std::string p = merged_pattern(static_cast<int>(w.size()));
      for (std::size_t i = 0; i < w.size(); ++i) set(w[i], p[i]);
    }
  }

  std::string snapshot(const std::string& what) const {
    std::string s;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) s += in(v) ? to_char(c_[v]) : '.';
    return what + "; partial colouring " + s;
  }

  void check(const char* step) const {
    std::vector<Vertex> processed;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (in(v)) processed.push_back(v);
    }
    const Graph h = induced_subgraph(g_, processed);
    std::vector<Color> colors;
    for (Vertex v : processed) colors.push_back(c_[v]);
    const auto report = verify_crumby(h, Coloring(colors));
    if (!report.ok) throw InvariantViolation(snapshot(std::string(step) + ": processed part is not crumby"));
    for (std::size_t i = 0; i < dec_.ears.size(); ++i) {
      const Ear& ear = dec_.ears[i];
      if (!done_[i] && in(ear.x) && in(ear.y) && c_.is_blue(ear.x) && c_.is_blue(ear.y)) {
        throw InvariantViolation(snapshot(std::string(step) + ": pending chord " + std::to_string(ear.x) + "-" +
                                          std::to_string(ear.y) + " has two blue ends"));
      }
    }
  }

  const Graph& g_;
  const EarDecomposition& dec_;
  Coloring c_;
  std::vector<char> in_;
  std::vector<char> done_;
  std::map<Edge, int> ear_of_chord_;
};

// Colours the tree hanging at `at` (vertices `tree`, ids of g) with the
// neighbour of `at` opposite to it.
void extend_opposite(const Graph& g, Coloring& c, const std::vector<Vertex>& tree, Vertex at) {
  const Graph t = induced_subgraph(g, tree);
  Prescription p;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    if (g.has_edge(tree[i], at)) p.fixed[static_cast<Vertex>(i)] = opposite(c[at]);
  }
  const auto r = solve_tree(t, p);
  if (r.status != SolveStatus::Sat) throw InvariantViolation("attached tree cannot take the opposite colour");
  for (std::size_t i = 0; i < tree.size(); ++i) c[tree[i]] = (*r.coloring)[static_cast<Vertex>(i)];
}

// Colours a hung tree with the given prescriptions (ids of g).
void color_tree(const Graph& g, Coloring& c, const std::vector<Vertex>& tree, Vertex at,
                const std::map<Vertex, Color>& fixed) {
  std::vector<Vertex> vs{at};
  vs.insert(vs.end(), tree.begin(), tree.end());
  const Graph t = induced_subgraph(g, vs);
  Prescription p;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (const auto it = fixed.find(vs[i]); it != fixed.end()) p.fixed[static_cast<Vertex>(i)] = it->second;
  }
  const auto r = solve_tree(t, p);
  if (r.status != SolveStatus::Sat) throw InvariantViolation("hung tree has no colouring with the required colours");
  for (std::size_t i = 0; i < vs.size(); ++i) c[vs[i]] = (*r.coloring)[static_cast<Vertex>(i)];
}

enum class Hung : std::uint8_t { Empty, K2, K13, Other };

}  // namespace

bool is_two_connected(const Graph& g) {
  return g.vertex_count() >= 3 && is_connected(g) && cut_vertices(g).empty();
}

bool is_outerplanar(const Graph& g) { return g.vertex_count() == 0 || apex_planarity(g).planar; }

OuterplanarRecognition embed_outerplanar(const Graph& g) {
  OuterplanarRecognition out;
  const int n = g.vertex_count();
  if (!is_connected(g) || n == 0) {
    out.failure = OuterplanarRecognition::Failure::NotConnected;
    out.message = "graph is not connected";
    return out;
  }
  if (n < 3) {
    out.failure = OuterplanarRecognition::Failure::NotTwoConnected;
    out.message = "fewer than 3 vertices";
    return out;
  }
  if (auto cuts = cut_vertices(g); !cuts.empty()) {
    out.failure = OuterplanarRecognition::Failure::NotTwoConnected;
    out.witness = {cuts.front()};
    out.message = "cut vertex " + std::to_string(cuts.front());
    return out;
  }
  const ApexResult apex = apex_planarity(g);
  if (!apex.planar) {
    out.failure = OuterplanarRecognition::Failure::NotOuterplanar;
    out.witness = apex.witness;
    out.message = "K4 or K2,3 subdivision on vertices " + list_text(apex.witness);
    return out;
  }
  std::vector<Vertex> cycle = apex.rotation;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) {
      throw InvariantViolation("apex rotation is not a Hamiltonian cycle");
    }
  }
  std::rotate(cycle.begin(), std::find(cycle.begin(), cycle.end(), 0), cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());

  OuterplanarEmbedding e;
  e.outer_cycle = cycle;
  std::set<Edge> outer;
  for (std::size_t i = 0; i < cycle.size(); ++i) outer.insert(Edge(cycle[i], cycle[(i + 1) % cycle.size()]));
  for (const Edge& edge : g.edges()) {
    if (!outer.count(edge)) e.chords.push_back(edge);
  }
  e.inner_faces = inner_faces(g, cycle);
  e.dual_tree.resize(e.inner_faces.size());
  std::map<Edge, int> first_face;
  for (std::size_t f = 0; f < e.inner_faces.size(); ++f) {
    const auto& face = e.inner_faces[f];
    for (std::size_t i = 0; i < face.size(); ++i) {
      const Edge edge(face[i], face[(i + 1) % face.size()]);
      if (outer.count(edge)) continue;
      const auto [it, fresh] = first_face.emplace(edge, static_cast<int>(f));
      if (!fresh) {
        e.dual_tree[static_cast<std::size_t>(it->second)].push_back({static_cast<int>(f), edge});
        e.dual_tree[f].push_back({it->second, edge});
      }
    }
  }
  for (auto& adj : e.dual_tree) std::sort(adj.begin(), adj.end());
  out.embedding = std::move(e);
  return out;
}

EarDecomposition ear_decomposition(const OuterplanarEmbedding& e, Vertex v) {
  std::vector<int> at_v;
  for (std::size_t f = 0; f < e.inner_faces.size(); ++f) {
    const auto& face = e.inner_faces[f];
    if (std::find(face.begin(), face.end(), v) != face.end()) at_v.push_back(static_cast<int>(f));
  }
  if (at_v.empty()) throw Error("vertex " + std::to_string(v) + " is not on any face");
  EarDecomposition d;
  d.initial_face = at_v.front();
  d.initial = e.inner_faces[static_cast<std::size_t>(d.initial_face)];
  std::rotate(d.initial.begin(), std::find(d.initial.begin(), d.initial.end(), v), d.initial.end());

  std::vector<char> seen(e.inner_faces.size(), 0);
  std::deque<int> queue{d.initial_face};
  seen[static_cast<std::size_t>(d.initial_face)] = 1;
  auto add = [&](int f, const Edge& chord, Vertex x) {
    const Vertex y = chord.u == x ? chord.v : chord.u;
    auto path = face_path(e.inner_faces[static_cast<std::size_t>(f)], x, y);
    d.ears.push_back({x, y, std::vector<Vertex>(path.begin() + 1, path.end() - 1), f});
    seen[static_cast<std::size_t>(f)] = 1;
    queue.push_back(f);
  };
  if (at_v.size() > 1) {
    for (const auto& [f, chord] : e.dual_tree[static_cast<std::size_t>(d.initial_face)]) {
      if (f == at_v[1]) add(f, chord, chord.u == v ? chord.v : chord.u);
    }
  }
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (const auto& [h, chord] : e.dual_tree[static_cast<std::size_t>(f)]) {
      if (!seen[static_cast<std::size_t>(h)]) add(h, chord, chord.u);
    }
  }
  return d;
}

Coloring solve_outerplanar_2conn(const Graph& g, Vertex v, Color color) {
  if (v < 0 || v >= g.vertex_count()) throw Error("prescribed vertex out of range");
  if (!g.is_subcubic()) throw Error("graph is not subcubic");
  const auto rec = embed_outerplanar(g);
  if (!rec.ok()) throw Error("not 2-connected outerplanar: " + rec.message);
  const EarDecomposition d = ear_decomposition(*rec.embedding, v);
  return EarSolver(g, d).run(v, color);
}

CycleWithTrees cycle_with_trees_structure(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3 || !is_connected(g) || !g.is_subcubic() || g.edge_count() != n) {
    throw Error("not a connected subcubic graph with exactly one cycle");
  }
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    if (g.degree(v) == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const Vertex v = leaves.back();
    leaves.pop_back();
    gone[static_cast<std::size_t>(v)] = 1;
    for (Vertex w : g.neighbors(v)) {
      if (!gone[static_cast<std::size_t>(w)] && --deg[static_cast<std::size_t>(w)] == 1) leaves.push_back(w);
    }
  }
  CycleWithTrees out;
  Vertex start = 0;
  while (gone[static_cast<std::size_t>(start)]) ++start;
  Vertex prev = -1, cur = start;
  do {
    out.cycle.push_back(cur);
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur)) {
      if (!gone[static_cast<std::size_t>(w)] && w != prev && (next < 0 || (prev < 0 && w < next))) next = w;
    }
    prev = cur;
    cur = next;
  } while (cur != start);
  for (Vertex c : out.cycle) {
    std::vector<Vertex> tree;
    for (Vertex w : g.neighbors(c)) {
      if (!gone[static_cast<std::size_t>(w)]) continue;
      std::deque<Vertex> queue{w};
      std::set<Vertex> seen{c, w};
      while (!queue.empty()) {
        const Vertex a = queue.front();
        queue.pop_front();
        tree.push_back(a);
        for (Vertex b : g.neighbors(a)) {
          if (seen.insert(b).second) queue.push_back(b);
        }
      }
    }
    std::sort(tree.begin(), tree.end());
    out.tree_of.push_back(std::move(tree));
  }
  return out;
}

Coloring solve_cycle_with_trees(const Graph& g) {
  const CycleWithTrees s = cycle_with_trees_structure(g);
  const int k = static_cast<int>(s.cycle.size());
  auto at = [&](int i) { return s.cycle[static_cast<std::size_t>(((i % k) + k) % k)]; };
  auto tree = [&](int i) -> const std::vector<Vertex>& { return s.tree_of[static_cast<std::size_t>(((i % k) + k) % k)]; };

  std::vector<Hung> kind(static_cast<std::size_t>(k), Hung::Empty);
  for (int i = 0; i < k; ++i) {
    const auto& t = tree(i);
    if (t.empty()) continue;
    if (t.size() == 1) {
      kind[static_cast<std::size_t>(i)] = Hung::K2;
    } else if (t.size() == 3 && std::any_of(t.begin(), t.end(), [&](Vertex w) { return g.degree(w) == 3; })) {
      kind[static_cast<std::size_t>(i)] = Hung::K13;
    } else {
      kind[static_cast<std::size_t>(i)] = Hung::Other;
    }
  }
  // Other trees go back on at the end with the opposite-colour rule, so the
  // cycle treats their vertices as empty.
  auto kind_of = [&](int i) { return kind[static_cast<std::size_t>(((i % k) + k) % k)]; };
  auto empty = [&](int i) { return kind_of(i) == Hung::Empty || kind_of(i) == Hung::Other; };

  Coloring c(g.vertex_count());
  std::vector<char> fixed_tree(static_cast<std::size_t>(k), 0);
  int empties = 0;
  for (int i = 0; i < k; ++i) empties += empty(i) ? 1 : 0;

  if (empties == k) {
    const std::string p = cycle_pattern(k);
    for (int i = 0; i < k; ++i) c[at(i)] = p[static_cast<std::size_t>(i)] == 'r' ? Color::Red : Color::Blue;
  } else if (empties == 0 && k % 2 == 0) {
    for (int i = 0; i < k; ++i) c[at(i)] = i % 2 == 0 ? Color::Red : Color::Blue;
  } else if (empties == 0) {
    // Colour every T_j - v_j alone and record its vertex next to v_j.
    Coloring alone(g.vertex_count());
    std::vector<Color> u(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
      const auto& t = tree(j);
      const auto r = solve_tree(induced_subgraph(g, t), {});
      for (std::size_t i = 0; i < t.size(); ++i) {
        alone[t[i]] = (*r.coloring)[static_cast<Vertex>(i)];
        if (g.has_edge(t[i], at(j))) u[static_cast<std::size_t>(j)] = alone[t[i]];
      }
    }
    int l = 0;
    while (u[static_cast<std::size_t>(l)] != u[static_cast<std::size_t>((l + 1) % k)]) ++l;
    const Color pair_color = opposite(u[static_cast<std::size_t>(l)]);
    c[at(l)] = c[at(l + 1)] = pair_color;
    for (int j = l; j <= l + 1; ++j) {
      for (Vertex w : tree(j)) c[w] = alone[w];
      fixed_tree[static_cast<std::size_t>((j % k + k) % k)] = 1;
    }
    for (int step = 0; step < k - 2; ++step) c[at(l + 2 + step)] = step % 2 == 0 ? opposite(pair_color) : pair_color;
  } else {
    int first = 0;
    while (empty(first) || !empty(first + 1)) ++first;
    c[at(first)] = Color::Red;
    c[at(first + 1)] = Color::Blue;
    for (int step = 2; step < k; ++step) {
      const int i = first + step;
      const bool forced = c[at(i - 1)] == Color::Red && empty(i - 1) && c[at(i - 2)] == Color::Blue;
      c[at(i)] = forced || c[at(i - 1)] == Color::Blue ? Color::Red : Color::Blue;
    }
    std::vector<Color> cycle_colors;
    for (int i = 0; i < k; ++i) cycle_colors.push_back(c[at(i)]);
    auto color_trees = [&]() {
      for (int i = 0; i < k; ++i) {
        if (empty(i) || fixed_tree[static_cast<std::size_t>(i)]) continue;
        const Vertex v = at(i);
        if (c.is_red(v) && (c.is_red(at(i - 1)) || c.is_red(at(i + 1)))) {
          // v already has a red neighbour: a K_{1,3} centre joins it, leaves stay blue.
          for (Vertex w : tree(i)) c[w] = g.degree(w) == 3 ? Color::Red : Color::Blue;
        } else {
          color_tree(g, c, tree(i), v, {{v, c[v]}});
        }
      }
    };
    color_trees();
    std::vector<Vertex> core;
    for (int i = 0; i < k; ++i) {
      core.push_back(at(i));
      if (!empty(i)) core.insert(core.end(), tree(i).begin(), tree(i).end());
    }
    auto core_crumby = [&] {
      std::vector<Color> part;
      for (Vertex w : core) part.push_back(c[w]);
      return is_crumby(induced_subgraph(g, core), Coloring(part));
    };
    if (!core_crumby() && kind_of(first) == Hung::K13 && c.is_red(at(first))) {
      // The walk closed with red at v_k; v_1 turns blue and T_1 - v_1 red.
      c[at(first)] = Color::Blue;
      for (Vertex w : tree(first)) c[w] = Color::Red;
      fixed_tree[static_cast<std::size_t>(((first % k) + k) % k)] = 1;
      color_trees();
    }
  }
  if (empties == 0 || empties == k) {
    for (int i = 0; i < k; ++i) {
      if (empty(i) || fixed_tree[static_cast<std::size_t>(i)]) continue;
      color_tree(g, c, tree(i), at(i), {{at(i), c[at(i)]}});
    }
  }
  for (int i = 0; i < k; ++i) {
    if (kind_of(i) == Hung::Other) extend_opposite(g, c, tree(i), at(i));
  }
  const auto report = verify_crumby(g, c);
  if (!report.ok) throw InvariantViolation("cycle with trees: colouring is not crumby: " + report.to_text());
  return c;
}

Graph attach_graph(const Graph& g, const Graph& t, Vertex leaf, Vertex at) {
  if (leaf < 0 || leaf >= t.vertex_count() || at < 0 || at >= g.vertex_count()) throw Error("attach: vertex out of range");
  Graph out = g;
  std::vector<Vertex> id(static_cast<std::size_t>(t.vertex_count()));
  for (Vertex v = 0; v < t.vertex_count(); ++v) id[static_cast<std::size_t>(v)] = v == leaf ? at : out.add_vertex();
  for (const Edge& e : t.edges()) out.add_edge(id[static_cast<std::size_t>(e.u)], id[static_cast<std::size_t>(e.v)]);
  return out;
}

Coloring attach_tree(const Graph& g, const Coloring& coloring, const Graph& t, Vertex leaf, Vertex at) {
  if (!is_tree(t) || !t.is_subcubic()) throw Error("attach: not a subcubic tree");
  if (leaf < 0 || leaf >= t.vertex_count() || t.degree(leaf) != 1) throw Error("attach: not a leaf");
  const Vertex x = t.neighbors(leaf)[0];
  if (t.vertex_count() == 2 || (t.vertex_count() == 4 && t.degree(x) == 3)) {
    throw Error("attach: K2 and K1,3 hung by a leaf need the caller's own rule");
  }
  if (coloring.size() != g.vertex_count()) throw Error("attach: colouring size mismatch");
  const Graph combined = attach_graph(g, t, leaf, at);
  std::vector<Vertex> rest;
  for (Vertex v = g.vertex_count(); v < combined.vertex_count(); ++v) rest.push_back(v);
  std::vector<Color> colors(coloring.colors().begin(), coloring.colors().end());
  colors.resize(static_cast<std::size_t>(combined.vertex_count()), Color::Red);
  Coloring c(colors);
  extend_opposite(combined, c, rest, at);
  const auto report = verify_crumby(combined, c);
  if (!report.ok) throw InvariantViolation("attach: colouring is not crumby: " + report.to_text());
  return c;
}

}  // namespace crumby
