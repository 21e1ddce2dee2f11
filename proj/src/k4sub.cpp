#include "crumby/k4sub.hpp"

#include <algorithm>
#include <sstream>

#include "crumby/error.hpp"
#include "crumby/fixtures.hpp"
#include "crumby/generators.hpp"
#include "crumby/oracle.hpp"
#include "crumby/verifier.hpp"

namespace crumby {

namespace {

constexpr std::array<std::array<Vertex, 2>, 6> kEnds{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
constexpr std::array<const char*, 4> kBlocks{"brr", "rrb", "rbr", "rrr"};

std::string counts_text(const K4Counts& counts) {
  std::ostringstream out;
  for (std::size_t i = 0; i < 6; ++i) out << (i ? " " : "") << counts[i];
  return out.str();
}

// Branch colours plus the internal colours of every edge, from its smaller end.
struct K4State {
  std::array<Color, 4> branch{};
  std::array<std::vector<Color>, 6> internal;

  K4Counts counts() const {
    K4Counts out{};
    for (std::size_t e = 0; e < 6; ++e) out[e] = static_cast<int>(internal[e].size());
    return out;
  }

  Coloring coloring() const {
    std::vector<Color> out(branch.begin(), branch.end());
    for (const auto& run : internal) out.insert(out.end(), run.begin(), run.end());
    return Coloring(out);
  }

  std::vector<Color> sequence(std::size_t e) const {
    std::vector<Color> seq{branch[static_cast<std::size_t>(kEnds[e][0])]};
    seq.insert(seq.end(), internal[e].begin(), internal[e].end());
    seq.push_back(branch[static_cast<std::size_t>(kEnds[e][1])]);
    return seq;
  }

  // Inserts `block` between sequence positions gap and gap + 1.
  K4State with_block(std::size_t e, std::size_t gap, std::string_view block) const {
    K4State out = *this;
    auto& run = out.internal[e];
    std::vector<Color> add;
    for (char ch : block) add.push_back(ch == 'r' ? Color::Red : Color::Blue);
    run.insert(run.begin() + static_cast<std::ptrdiff_t>(gap), add.begin(), add.end());
    return out;
  }

  bool crumby() const { return is_crumby(gen_k4_subdivided(counts()).expanded(), coloring()); }
};

// The insertion the construction prescribes for edge e.
std::pair<std::size_t, std::string_view> primary_insertion(const std::vector<Color>& seq) {
  for (std::size_t p = 0; p + 1 < seq.size(); ++p) {
    if (seq[p] != seq[p + 1]) return {p, seq[p] == Color::Red ? "brr" : "rrb"};
  }
  return {0, seq.front() == Color::Red ? "rbr" : "rrr"};
}

bool route(const Graph& g, const std::array<Vertex, 4>& b, std::vector<char>& used, int pair, Vertex at);

bool route_pair(const Graph& g, const std::array<Vertex, 4>& b, std::vector<char>& used, int pair) {
  if (pair == 6) return true;
  return route(g, b, used, pair, b[static_cast<std::size_t>(kEnds[static_cast<std::size_t>(pair)][0])]);
}

// Extends a path for `pair` from `at`; internal vertices are neither branch
// vertices nor on an earlier path.
bool route(const Graph& g, const std::array<Vertex, 4>& b, std::vector<char>& used, int pair, Vertex at) {
  const auto& ends = kEnds[static_cast<std::size_t>(pair)];
  const Vertex t = b[static_cast<std::size_t>(ends[1])];
  for (Vertex w : g.neighbors(at)) {
    if (w == t) {
      if (route_pair(g, b, used, pair + 1)) return true;
      continue;
    }
    if (used[static_cast<std::size_t>(w)]) continue;
    used[static_cast<std::size_t>(w)] = 1;
    if (route(g, b, used, pair, w)) return true;
    used[static_cast<std::size_t>(w)] = 0;
  }
  return false;
}

}  // namespace

Coloring solve_k4_base(const K4Counts& counts) {
  for (int c : counts) {
    if (c < 0 || c > 2) throw Error("K4 base counts must be 0, 1 or 2, got " + counts_text(counts));
  }
  const auto& base = fixtures().k4_base;
  if (const auto it = base.find(counts); it != base.end()) return it->second;
  const auto r = solve_exact(gen_k4_subdivided(counts).expanded());
  if (r.status != SolveStatus::Sat) throw InvariantViolation("K4 base " + counts_text(counts) + " has no crumby colouring");
  return *r.coloring;
}

Coloring solve_k4_subdivision(const K4Counts& counts, K4ExpansionLog* log) {
  K4Counts reduced{};
  for (std::size_t e = 0; e < 6; ++e) {
    if (counts[e] < 0) throw Error("negative count in " + counts_text(counts));
    reduced[e] = counts[e] % 3;
  }
  const Coloring base = solve_k4_base(reduced);
  K4State state;
  for (std::size_t v = 0; v < 4; ++v) state.branch[v] = base[static_cast<Vertex>(v)];
  Vertex next = 4;
  for (std::size_t e = 0; e < 6; ++e) {
    for (int i = 0; i < reduced[e]; ++i) state.internal[e].push_back(base[next++]);
  }

  for (std::size_t e = 0; e < 6; ++e) {
    for (int round = 0; round < counts[e] / 3; ++round) {
      const auto seq = state.sequence(e);
      const auto [gap, block] = primary_insertion(seq);
      K4State trial = state.with_block(e, gap, block);
      if (log) ++log->insertions;
      if (trial.crumby()) {
        state = std::move(trial);
        continue;
      }
      bool found = false;
      for (std::size_t p = 0; p + 1 < seq.size() && !found; ++p) {
        for (const char* alt : kBlocks) {
          trial = state.with_block(e, p, alt);
          if (!trial.crumby()) continue;
          if (log) {
            log->fallbacks.push_back("counts " + counts_text(counts) + " edge " + std::to_string(e) + ": " +
                                     std::string(block) + " at " + std::to_string(gap) + " failed, used " + alt +
                                     " at " + std::to_string(p));
          }
          state = std::move(trial);
          found = true;
          break;
        }
      }
      if (!found) {
        throw InvariantViolation("K4 subdivision " + counts_text(counts) + ": no verified insertion on edge " +
                                 std::to_string(e) + " from " + state.coloring().to_string());
      }
    }
  }
  Coloring out = state.coloring();
  const auto report = verify_crumby(gen_k4_subdivided(counts).expanded(), out);
  if (!report.ok) throw InvariantViolation("K4 subdivision " + counts_text(counts) + ": " + report.to_text());
  return out;
}

std::optional<std::array<Vertex, 4>> find_k4_subdivision(const Graph& g) {
  std::vector<Vertex> cubic;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) >= 3) cubic.push_back(v);
  }
  const std::size_t m = cubic.size();
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        for (std::size_t l = k + 1; l < m; ++l) {
          const std::array<Vertex, 4> b{cubic[i], cubic[j], cubic[k], cubic[l]};
          std::fill(used.begin(), used.end(), 0);
          for (Vertex v : b) used[static_cast<std::size_t>(v)] = 1;
          if (route_pair(g, b, used, 0)) return b;
        }
      }
    }
  }
  return std::nullopt;
}

bool k4_minor_free_subcubic(const Graph& g) {
  if (!g.is_subcubic()) throw Error("K4-minor test is for subcubic graphs only");
  return !find_k4_subdivision(g).has_value();
}

}  // namespace crumby
