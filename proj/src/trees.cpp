#include "crumby/trees.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <utility>

#include "crumby/error.hpp"

namespace crumby {

std::string_view to_string(TreeState s) {
  switch (s) {
    case TreeState::BFree:
      return "B_free";
    case TreeState::BPair:
      return "B_pair";
    case TreeState::RPend:
      return "R_pend";
    case TreeState::RCtr1:
      return "R_ctr(1)";
    case TreeState::RCtr2:
      return "R_ctr(2)";
    case TreeState::RCtr3:
      return "R_ctr(3)";
    case TreeState::RLeaf:
      return "R_leaf";
  }
  return "?";
}

namespace {

constexpr std::array<TreeState, kTreeStateCount> kAllStates{TreeState::BFree, TreeState::BPair, TreeState::RPend,
                                                            TreeState::RCtr1, TreeState::RCtr2, TreeState::RCtr3,
                                                            TreeState::RLeaf};
constexpr std::array<TreeState, 6> kRootPreference{TreeState::RCtr1, TreeState::RCtr2, TreeState::RCtr3,
                                                   TreeState::RLeaf, TreeState::BFree, TreeState::BPair};

// Children are tallied by class: BFree, BPair, RPend, RCtr(any), RLeaf; two
// bits per class.
int tally_unit(TreeState s) {
  switch (s) {
    case TreeState::BFree:
      return 1 << 0;
    case TreeState::BPair:
      return 1 << 2;
    case TreeState::RPend:
      return 1 << 4;
    case TreeState::RCtr1:
    case TreeState::RCtr2:
    case TreeState::RCtr3:
      return 1 << 6;
    case TreeState::RLeaf:
      return 1 << 8;
  }
  return 0;
}

int field(int tally, int cls) { return tally >> (2 * cls) & 3; }

bool is_red(TreeState s) { return s != TreeState::BFree && s != TreeState::BPair; }

// State of a vertex of colour c whose children have the given tally, or -1.
int combine(Color c, int tally) {
  const int b_free = field(tally, 0), b_pair = field(tally, 1), r_pend = field(tally, 2), r_ctr = field(tally, 3),
            r_leaf = field(tally, 4);
  if (c == Color::Blue) {
    if (b_pair || r_pend || b_free > 1) return -1;
    return static_cast<int>(b_free == 0 ? TreeState::BFree : TreeState::BPair);
  }
  if (r_leaf || r_ctr > 1 || (r_ctr == 1 && r_pend > 0)) return -1;
  if (r_ctr == 1) return static_cast<int>(TreeState::RLeaf);
  if (r_pend == 0) return static_cast<int>(TreeState::RPend);
  return static_cast<int>(TreeState::RCtr1) + r_pend - 1;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > std::numeric_limits<std::uint64_t>::max() / b ? std::numeric_limits<std::uint64_t>::max() : a * b;
}

void check_tree(const Graph& t, const Prescription& p) {
  if (!is_tree(t)) throw Error("not a tree");
  if (!t.is_subcubic()) throw Error("tree has a vertex of degree > 3");
  p.check(t.vertex_count());
}

std::set<int> child_tallies(const TreeStateTable& table, const std::vector<Vertex>& kids, std::size_t from) {
  std::set<int> current{0};
  for (std::size_t i = from; i < kids.size(); ++i) {
    std::set<int> next;
    for (int t : current) {
      for (TreeState s : kAllStates) {
        if (table.feasible(kids[i], s)) next.insert(t + tally_unit(s));
      }
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace

std::vector<TreeState> TreeStateTable::states(Vertex v) const {
  std::vector<TreeState> out;
  for (TreeState s : kAllStates) {
    if (feasible(v, s)) out.push_back(s);
  }
  return out;
}

std::uint64_t TreeStateTable::total() const {
  std::uint64_t sum = 0;
  for (TreeState s : kRootPreference) sum = sat_add(sum, count[static_cast<std::size_t>(root)][static_cast<std::size_t>(s)]);
  return sum;
}

TreeStateTable tree_state_table(const Graph& t, Vertex root, const Prescription& p) {
  check_tree(t, p);
  if (root < 0 || root >= t.vertex_count()) throw Error("root out of range");
  const std::size_t n = static_cast<std::size_t>(t.vertex_count());
  TreeStateTable table;
  table.root = root;
  table.parent.assign(n, -1);
  table.children.assign(n, {});
  table.count.assign(n, {});
  const auto order = bfs_order(t, root);
  for (Vertex v : order) {
    for (Vertex w : t.neighbors(v)) {
      if (w != table.parent[static_cast<std::size_t>(v)]) {
        table.parent[static_cast<std::size_t>(w)] = v;
        table.children[static_cast<std::size_t>(v)].push_back(w);
      }
    }
    std::sort(table.children[static_cast<std::size_t>(v)].begin(), table.children[static_cast<std::size_t>(v)].end());
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    std::vector<std::pair<int, std::uint64_t>> acc{{0, 1}};
    for (Vertex child : table.children[static_cast<std::size_t>(v)]) {
      std::vector<std::pair<int, std::uint64_t>> next;
      for (const auto& [tally, ways] : acc) {
        for (TreeState s : kAllStates) {
          const std::uint64_t c = table.count[static_cast<std::size_t>(child)][static_cast<std::size_t>(s)];
          if (c == 0) continue;
          const int key = tally + tally_unit(s);
          auto found = std::find_if(next.begin(), next.end(), [&](const auto& e) { return e.first == key; });
          if (found == next.end()) {
            next.emplace_back(key, sat_mul(ways, c));
          } else {
            found->second = sat_add(found->second, sat_mul(ways, c));
          }
        }
      }
      acc = std::move(next);
    }
    auto& row = table.count[static_cast<std::size_t>(v)];
    for (Color color : {Color::Red, Color::Blue}) {
      if (!p.allows(v, color)) continue;
      for (const auto& [tally, ways] : acc) {
        const int s = combine(color, tally);
        if (s >= 0) row[static_cast<std::size_t>(s)] = sat_add(row[static_cast<std::size_t>(s)], ways);
      }
    }
  }
  return table;
}

SolveResult solve_tree(const Graph& t, const Prescription& p) {
  check_tree(t, p);
  const Vertex root = p.fixed.size() == 1 ? p.fixed.begin()->first : 0;
  const TreeStateTable table = tree_state_table(t, root, p);
  SolveResult result;
  result.nodes = static_cast<std::uint64_t>(t.vertex_count());
  const std::size_t n = static_cast<std::size_t>(t.vertex_count());
  std::vector<int> target(n, -1);
  for (TreeState s : kRootPreference) {
    if (table.feasible(root, s)) {
      target[static_cast<std::size_t>(root)] = static_cast<int>(s);
      break;
    }
  }
  if (target[static_cast<std::size_t>(root)] < 0) {
    result.status = SolveStatus::Unsat;
    return result;
  }
  Coloring coloring(t.vertex_count());
  for (Vertex v : bfs_order(t, root)) {
    const TreeState want = static_cast<TreeState>(target[static_cast<std::size_t>(v)]);
    const Color color = is_red(want) ? Color::Red : Color::Blue;
    coloring[v] = color;
    const auto& kids = table.children[static_cast<std::size_t>(v)];
    int acc = 0;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const std::set<int> rest = child_tallies(table, kids, i + 1);
      bool chosen = false;
      for (TreeState s : kAllStates) {
        if (!table.feasible(kids[i], s)) continue;
        const int with = acc + tally_unit(s);
        const bool completes =
            std::any_of(rest.begin(), rest.end(), [&](int r) { return combine(color, with + r) == static_cast<int>(want); });
        if (completes) {
          target[static_cast<std::size_t>(kids[i])] = static_cast<int>(s);
          acc = with;
          chosen = true;
          break;
        }
      }
      if (!chosen) throw InvariantViolation("tree reconstruction: no child state completes " + std::string(to_string(want)));
    }
  }
  result.status = SolveStatus::Sat;
  result.coloring = std::move(coloring);
  return result;
}

std::uint64_t count_tree_colorings(const Graph& t, const Prescription& p) {
  check_tree(t, p);
  return tree_state_table(t, 0, p).total();
}

}  // namespace crumby
