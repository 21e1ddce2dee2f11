#include "crumby/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "crumby/error.hpp"
#include "crumby/fixture_data.hpp"
#include "crumby/generators.hpp"
#include "crumby/oracle.hpp"
#include "crumby/verifier.hpp"

namespace crumby {

namespace {

const std::array<FixtureFile, 7> kFiles{{
    {"table1", FixtureSource::Transcribed, embedded::table1},
    {"cycles", FixtureSource::Transcribed, embedded::cycles},
    {"two_faces", FixtureSource::Transcribed, embedded::two_faces},
    {"ears", FixtureSource::Transcribed, embedded::ears},
    {"two_squares", FixtureSource::Oracle, embedded::two_squares},
    {"k4_paths", FixtureSource::Transcribed, embedded::k4_paths},
    {"k4_base", FixtureSource::Oracle, embedded::k4_base},
}};

struct Line {
  int number = 0;
  std::vector<std::string> head;  // tokens before ':' (all tokens if none)
  std::string tail;               // text after ':', trimmed
};

std::vector<Line> data_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;
    Line line;
    line.number = number;
    const auto colon = raw.find(':');
    std::istringstream head(raw.substr(0, colon));
    for (std::string tok; head >> tok;) line.head.push_back(tok);
    if (colon != std::string::npos) {
      line.tail = raw.substr(colon + 1);
      const auto a = line.tail.find_first_not_of(" \t");
      const auto b = line.tail.find_last_not_of(" \t\r");
      line.tail = a == std::string::npos ? "" : line.tail.substr(a, b - a + 1);
    }
    out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(std::string_view file, int line, const std::string& what) {
  throw Error(std::string(file) + ".txt line " + std::to_string(line) + ": " + what);
}

int to_int(std::string_view file, const Line& line, const std::string& tok) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used == tok.size()) return v;
  } catch (const std::exception&) {
  }
  fail(file, line.number, "expected an integer, got '" + tok + "'");
}

std::string lower(std::string s) {
  for (char& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

bool only_rb(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char ch) { return ch == 'r' || ch == 'b'; });
}

void parse_table1(std::string_view text, FixtureSet& out) {
  for (const Line& line : data_lines(text)) {
    if (line.head.size() != 4) fail("table1", line.number, "expected k and three patterns");
    Table1Row row{to_int("table1", line, line.head[0]), line.head[1], line.head[2], line.head[3]};
    const std::array<std::pair<const std::string*, PatternPurpose>, 3> cells{{
        {&row.singleton, PatternPurpose::EndpointsSingletonRed},
        {&row.k2, PatternPurpose::EndpointsInRedK2},
        {&row.mixed, PatternPurpose::MixedSingletonAndK2},
    }};
    for (const auto& [cell, purpose] : cells) {
      const std::string p = lower(*cell);
      const std::string where = "k=" + std::to_string(row.k) + " " + std::string(to_string(purpose));
      if (static_cast<int>(p.size()) != row.k || !only_rb(p)) fail("table1", line.number, where + ": bad pattern");
      const bool marked = std::any_of(cell->begin(), cell->end(), [](char ch) { return std::isupper(static_cast<unsigned char>(ch)); });
      if (validate_pattern(p, purpose) == marked) {
        fail("table1", line.number, where + (marked ? ": marked unattainable but valid" : ": does not validate"));
      }
      // Unattainable cells must still be crumby away from the ends.
      if (marked && !validate_pattern(p, PatternPurpose::EndpointsSingletonRed) &&
          !validate_pattern(p, PatternPurpose::EndpointsInRedK2) &&
          !validate_pattern(p, PatternPurpose::MixedSingletonAndK2)) {
        fail("table1", line.number, where + ": not crumby away from the ends");
      }
    }
    out.table1.push_back(std::move(row));
  }
}

void parse_cycles(std::string_view text, FixtureSet& out) {
  for (const Line& line : data_lines(text)) {
    if (line.head.size() != 2) fail("cycles", line.number, "expected k and a colouring");
    const int k = to_int("cycles", line, line.head[0]);
    const std::string& p = line.head[1];
    if (k < 3 || static_cast<int>(p.size()) != k || !only_rb(p)) fail("cycles", line.number, "bad row");
    if (!is_crumby(make_cycle(k), Coloring::from_string(p))) fail("cycles", line.number, "C_" + std::to_string(k) + " colouring is not crumby");
    out.cycles[k] = p;
  }
}

void parse_two_faces(std::string_view text, FixtureSet& out) {
  auto residue = [](const std::string& tok, const Line& line) {
    if (tok == "*") return 0;
    const int r = to_int("two_faces", line, tok);
    if (r < 1 || r > 3) fail("two_faces", line.number, "residue must be 1, 2 or 3");
    return r;
  };
  for (const Line& line : data_lines(text)) {
    if (line.head.size() != 4 || (line.head[0] != "w" && line.head[0] != "z")) fail("two_faces", line.number, "expected part, residues and condition");
    TwoFaceRule rule;
    rule.part = line.head[0][0];
    rule.k_residue = residue(line.head[1], line);
    rule.l_residue = residue(line.head[2], line);
    const std::string& cond = line.head[3];
    if (cond == "*") {
    } else if (cond.size() >= 3 && cond.substr(1, 2) == ">=") {
      rule.min_rep = to_int("two_faces", line, cond.substr(3));
    } else if (cond.size() >= 2 && cond[1] == '=') {
      rule.min_rep = rule.max_rep = to_int("two_faces", line, cond.substr(2));
    } else {
      fail("two_faces", line.number, "bad condition '" + cond + "'");
    }
    rule.templ = line.tail;
    try {
      (void)expand_template(rule.templ, rule.min_rep);
    } catch (const Error& e) {
      fail("two_faces", line.number, e.what());
    }
    out.two_faces.push_back(std::move(rule));
  }
}

void parse_ears(std::string_view text, FixtureSet& out) {
  for (const Line& line : data_lines(text)) {
    if (!line.head.empty() && line.head[0] == "m") {
      if (line.head.size() != 2) fail("ears", line.number, "expected m and the count");
      const int m = to_int("ears", line, line.head[1]);
      if (static_cast<int>(line.tail.size()) != m || !only_rb(line.tail)) fail("ears", line.number, "bad merged colouring");
      out.merged[m] = line.tail;
      continue;
    }
    if (line.head.size() != 4 && line.head.size() != 5) fail("ears", line.number, "expected l, ends, statuses");
    EarRule rule;
    rule.length = to_int("ears", line, line.head[0]);
    if (line.head[1] != "rb" && line.head[1] != "rr") fail("ears", line.number, "ends must be rb or rr");
    rule.rr = line.head[1] == "rr";
    const std::string& xs = line.head[2];
    rule.x = xs == "end" ? EndStatus::End : xs == "not-end" ? EndStatus::NotEnd : EndStatus::Any;
    if (xs != "*" && rule.x == EndStatus::Any) fail("ears", line.number, "bad x status");
    const std::string& ys = line.head[3];
    rule.y = ys == "single" ? BlueStatus::Single : ys == "pair" ? BlueStatus::Pair : BlueStatus::Any;
    if (ys != "*" && rule.y == BlueStatus::Any) fail("ears", line.number, "bad y status");
    if (line.head.size() == 5) {
      if (line.head[4] != "merged") fail("ears", line.number, "unknown flag");
      rule.merged = true;
    }
    rule.colors = line.tail;
    if (static_cast<int>(rule.colors.size()) != rule.length + 2 || !only_rb(rule.colors)) fail("ears", line.number, "colouring length");
    out.ears.push_back(std::move(rule));
  }
  int row = 0;
  for (const EarRule& rule : out.ears) {
    ++row;
    const std::string problem = check_ear_rule(rule, out.merged);
    if (!problem.empty()) throw Error("ears.txt rule " + std::to_string(row) + ": " + problem);
  }
}

void parse_two_squares(std::string_view text, FixtureSet& out) {
  for (const Line& line : data_lines(text)) {
    if (line.head.size() != 1 || (line.head[0] != "red" && line.head[0] != "blue")) fail("two_squares", line.number, "expected red or blue");
    const int slot = line.head[0] == "red" ? 0 : 1;
    if (line.tail.size() != 6 || !only_rb(line.tail)) fail("two_squares", line.number, "expected six colours");
    const Coloring c = Coloring::from_string(line.tail);
    if (c[3] != (slot == 0 ? Color::Red : Color::Blue) || !valid_two_face_start(2, 2, c)) {
      fail("two_squares", line.number, "not a valid start with v " + line.head[0]);
    }
    out.two_squares[static_cast<std::size_t>(slot)] = line.tail;
  }
}

void parse_k4_paths(std::string_view text, FixtureSet& out) {
  for (const Line& line : data_lines(text)) {
    if (line.head.size() != 3) fail("k4_paths", line.number, "expected i j k");
    K4PathRow row{to_int("k4_paths", line, line.head[0]), to_int("k4_paths", line, line.head[1]),
                  to_int("k4_paths", line, line.head[2]), line.tail};
    Coloring c;
    try {
      c = k4_path_coloring(row);
    } catch (const Error& e) {
      fail("k4_paths", line.number, e.what());
    }
    const auto sg = gen_k4_subdivided({0, row.i, row.j, 0, row.k, 0});
    const auto report = verify_crumby(sg.expanded(), c);
    if (!report.ok) fail("k4_paths", line.number, "not crumby: " + report.to_text());
    out.k4_paths.push_back(std::move(row));
  }
}

void parse_k4_base(std::string_view text, FixtureSet& out) {
  for (const Line& line : data_lines(text)) {
    if (line.head.size() != 6) fail("k4_base", line.number, "expected six counts");
    std::array<int, 6> counts{};
    for (std::size_t i = 0; i < 6; ++i) {
      counts[i] = to_int("k4_base", line, line.head[i]);
      if (counts[i] < 0 || counts[i] > 2) fail("k4_base", line.number, "counts must be 0, 1 or 2");
    }
    const auto sg = gen_k4_subdivided(counts);
    if (static_cast<int>(line.tail.size()) != sg.expanded().vertex_count() || !only_rb(line.tail)) {
      fail("k4_base", line.number, "colouring length");
    }
    const Coloring c = Coloring::from_string(line.tail);
    if (!is_crumby(sg.expanded(), c)) fail("k4_base", line.number, "not crumby");
    out.k4_base[counts] = c;
  }
}

bool ends_red_p3(const Graph& g, const Coloring& c, Vertex x) {
  if (!c.is_red(x)) return false;
  for (Vertex a : g.neighbors(x)) {
    if (!c.is_red(a)) continue;
    for (Vertex b : g.neighbors(a)) {
      if (b != x && c.is_red(b)) return true;
    }
  }
  return false;
}

bool blue_single(const Graph& g, const Coloring& c, Vertex y) {
  return std::none_of(g.neighbors(y).begin(), g.neighbors(y).end(), [&](Vertex w) { return c.is_blue(w); });
}

std::string merged_colors(const std::map<int, std::string>& merged, int m) {
  if (m <= 6) return merged.at(m);
  return merged_colors(merged, m - 3) + "brr";
}

bool has_red_triangle(const Graph& g, const Coloring& c) {
  for (const Edge& e : g.edges()) {
    if (!c.is_red(e.u) || !c.is_red(e.v)) continue;
    for (Vertex w : g.neighbors(e.u)) {
      if (w != e.v && c.is_red(w) && g.has_edge(w, e.v)) return true;
    }
  }
  return false;
}

}  // namespace

std::string_view to_string(FixtureSource s) { return s == FixtureSource::Transcribed ? "transcribed" : "oracle"; }

std::span<const FixtureFile> fixture_files() { return kFiles; }

std::string expand_template(std::string_view templ, int rep) {
  std::string out;
  std::istringstream in{std::string(templ)};
  for (std::string tok; in >> tok;) {
    if (tok.front() != '(') {
      if (!only_rb(tok)) throw Error("bad template token '" + tok + "'");
      out += tok;
      continue;
    }
    const auto close = tok.find(")^");
    if (close == std::string::npos) throw Error("bad template token '" + tok + "'");
    const std::string unit = tok.substr(1, close - 1);
    std::string exp = tok.substr(close + 2);
    if (!exp.empty() && exp.front() == '{') exp = exp.substr(1, exp.size() - 2);
    int times = rep;
    if (exp.size() > 2 && exp[1] == '-') times = rep - std::stoi(exp.substr(2));
    else if (exp.size() != 1) throw Error("bad exponent '" + exp + "'");
    if (times < 0 || !only_rb(unit)) throw Error("bad template token '" + tok + "'");
    for (int i = 0; i < times; ++i) out += unit;
  }
  return out;
}

Graph two_face_graph(int k, int l) {
  if (k < 1 || l < 1) throw Error("two faces need k, l >= 1");
  Graph g(k + l + 2);
  const Vertex u = 0, v = k + 1;
  Vertex prev = u;
  for (Vertex w = 1; w <= k; ++w) g.add_edge(prev, w), prev = w;
  g.add_edge(prev, v);
  g.add_edge(u, v);
  prev = u;
  for (Vertex z = k + 2; z <= k + l + 1; ++z) g.add_edge(prev, z), prev = z;
  g.add_edge(prev, v);
  return g;
}

bool valid_two_face_start(int k, int l, const Coloring& c) {
  const Graph g = two_face_graph(k, l);
  if (c.size() != g.vertex_count() || !is_crumby(g, c)) return false;
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) == 2 && g.degree(e.v) == 2 && c.is_blue(e.u) && c.is_blue(e.v)) return false;
  }
  return true;
}

std::string check_ear_rule(const EarRule& rule, const std::map<int, std::string>& merged) {
  // Path l3 l2 l1 x y r1 r2 r3, then the ear from x to y; a merged rule also
  // gets a second ear on z_2 z_3.
  constexpr Vertex x = 3, y = 4;
  const Graph path = make_path(8);
  const int l = rule.length;
  const int max_m = rule.merged ? 12 : 0;
  int matched = 0;
  for (std::uint32_t bits = 0; bits < 256; ++bits) {
    Coloring before(8);
    for (Vertex v = 0; v < 8; ++v) before[v] = (bits >> v & 1u) ? Color::Blue : Color::Red;
    if (!before.is_red(x) || before.is_red(y) != rule.rr || !is_crumby(path, before)) continue;
    const bool x_end = ends_red_p3(path, before, x);
    if ((rule.x == EndStatus::End && !x_end) || (rule.x == EndStatus::NotEnd && x_end)) continue;
    const bool single = blue_single(path, before, y);
    if ((rule.y == BlueStatus::Single && !single) || (rule.y == BlueStatus::Pair && single)) continue;
    ++matched;
    for (int m = rule.merged ? 1 : 0; m <= max_m; ++m) {
      Graph g = path;
      std::vector<Vertex> z;
      for (int i = 0; i < l; ++i) z.push_back(g.add_vertex());
      g.add_edge(x, z.front());
      for (int i = 0; i + 1 < l; ++i) g.add_edge(z[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(i + 1)]);
      g.add_edge(z.back(), y);
      std::vector<Color> colors(before.colors().begin(), before.colors().end());
      auto paint = [&](Vertex v, char ch) {
        if (static_cast<std::size_t>(v) >= colors.size()) colors.resize(static_cast<std::size_t>(v) + 1);
        colors[static_cast<std::size_t>(v)] = ch == 'r' ? Color::Red : Color::Blue;
      };
      paint(x, rule.colors.front());
      for (int i = 0; i < l; ++i) paint(z[static_cast<std::size_t>(i)], rule.colors[static_cast<std::size_t>(i + 1)]);
      paint(y, rule.colors.back());
      if (rule.merged) {
        const std::string w = merged_colors(merged, m);
        Vertex prev = z[1];
        for (int i = 0; i < m; ++i) {
          const Vertex wv = g.add_vertex();
          g.add_edge(prev, wv);
          paint(wv, w[static_cast<std::size_t>(i)]);
          prev = wv;
        }
        g.add_edge(prev, z[2]);
      }
      const auto report = verify_crumby(g, Coloring(colors));
      if (!report.ok) {
        std::ostringstream out;
        out << "fails from path colouring " << before.to_string();
        if (rule.merged) out << " with m=" << m;
        out << ": " << report.to_text();
        return out.str();
      }
    }
  }
  if (matched == 0) return "no configuration matches the rule";
  return {};
}

Coloring k4_path_coloring(const K4PathRow& row) {
  std::vector<char> branch;
  std::array<std::string, 3> runs;
  for (char ch : row.colors) {
    if (ch == ' ') continue;
    if (ch == 'R' || ch == 'B') {
      branch.push_back(ch);
    } else if (ch == 'r' || ch == 'b') {
      if (branch.empty() || branch.size() > 3) throw Error("internal colours outside C..B");
      runs[branch.size() - 1] += ch;
    } else {
      throw Error(std::string("bad character '") + ch + "'");
    }
  }
  if (branch.size() != 4) throw Error("expected four branch colours");
  if (static_cast<int>(runs[0].size()) != row.i || static_cast<int>(runs[1].size()) != row.j ||
      static_cast<int>(runs[2].size()) != row.k) {
    throw Error("internal counts do not match i j k");
  }
  const auto sg = gen_k4_subdivided({0, row.i, row.j, 0, row.k, 0});
  Coloring c(sg.expanded().vertex_count());
  constexpr Vertex A = 0, B = 1, C = 2, D = 3;
  const std::array<Vertex, 4> order{C, A, D, B};
  for (std::size_t i = 0; i < 4; ++i) c[order[i]] = branch[i] == 'R' ? Color::Red : Color::Blue;
  const std::array<std::pair<Vertex, Vertex>, 3> segments{{{C, A}, {A, D}, {D, B}}};
  for (std::size_t s = 0; s < 3; ++s) {
    auto path = sg.edge_path(sg.edge_index(Edge(segments[s].first, segments[s].second)));
    if (path.front() != segments[s].first) std::reverse(path.begin(), path.end());
    for (std::size_t i = 0; i < runs[s].size(); ++i) c[path[i + 1]] = runs[s][i] == 'r' ? Color::Red : Color::Blue;
  }
  return c;
}

FixtureSet parse_fixtures(const std::map<std::string, std::string, std::less<>>& texts) {
  auto text = [&](std::string_view name) -> std::string_view {
    const auto it = texts.find(name);
    if (it == texts.end()) throw Error("missing fixture file " + std::string(name) + ".txt");
    return it->second;
  };
  FixtureSet out;
  parse_table1(text("table1"), out);
  parse_cycles(text("cycles"), out);
  parse_two_faces(text("two_faces"), out);
  parse_ears(text("ears"), out);
  parse_two_squares(text("two_squares"), out);
  parse_k4_paths(text("k4_paths"), out);
  parse_k4_base(text("k4_base"), out);
  return out;
}

const FixtureSet& fixtures() {
  static const FixtureSet set = [] {
    std::map<std::string, std::string, std::less<>> texts;
    for (const FixtureFile& f : kFiles) texts.emplace(std::string(f.name), std::string(f.text));
    return parse_fixtures(texts);
  }();
  return set;
}

std::map<std::string, std::string> regenerate_fixtures() {
  std::map<std::string, std::string> out;

  std::ostringstream squares;
  squares << "# Two 4-faces u w_1 w_2 v and u z_1 z_2 v sharing the edge uv.\n"
          << "# provenance: oracle\n"
          << "# First crumby colouring in oracle search order with v prescribed and\n"
          << "# neither w_1 w_2 nor z_1 z_2 both blue. Colours of u w_1 w_2 v z_1 z_2.\n";
  const Graph g = two_face_graph(2, 2);
  for (Color v : {Color::Red, Color::Blue}) {
    std::optional<Coloring> found;
    for_each_coloring(g, Prescription{{3, v}}, [&](const Coloring& c) {
      if (!valid_two_face_start(2, 2, c)) return true;
      found = c;
      return false;
    });
    if (!found) throw InvariantViolation("no start for two squares");
    squares << (v == Color::Red ? "red" : "blue") << " : " << found->to_string() << '\n';
  }
  out["two_squares"] = squares.str();

  std::ostringstream base;
  base << "# Subdivisions of K4 with 0, 1 or 2 internal vertices per edge.\n"
       << "# provenance: oracle\n"
       << "# Counts on AB AC AD BC BD CD, then the colouring of gen_k4_subdivided:\n"
       << "# A B C D, then internal vertices edge by edge in that order, each edge\n"
       << "# read from its smaller end. First colouring in oracle search order with\n"
       << "# no red triangle.\n";
  std::array<int, 6> counts{};
  for (int code = 0; code < 729; ++code) {
    for (int i = 5, rest = code; i >= 0; --i, rest /= 3) counts[static_cast<std::size_t>(i)] = rest % 3;
    const auto sg = gen_k4_subdivided(counts);
    std::optional<Coloring> found;
    for_each_coloring(sg.expanded(), {}, [&](const Coloring& c) {
      if (has_red_triangle(sg.expanded(), c)) return true;
      found = c;
      return false;
    });
    if (!found) throw InvariantViolation("K4 base vector without a triangle-free colouring");
    for (int c : counts) base << c << ' ';
    base << ": " << found->to_string() << '\n';
  }
  out["k4_base"] = base.str();
  return out;
}

}  // namespace crumby
