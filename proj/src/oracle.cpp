#include "crumby/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "crumby/error.hpp"

namespace crumby {

bool Prescription::allows(Vertex v, Color c) const {
  auto it = fixed.find(v);
  return it == fixed.end() || it->second == c;
}

bool Prescription::satisfied_by(const Coloring& c) const {
  for (const auto& [v, color] : fixed) {
    if (v >= c.size() || c[v] != color) return false;
  }
  return true;
}

void Prescription::check(int n) const {
  for (const auto& [v, color] : fixed) {
    if (v < 0 || v >= n) throw Error("prescribed vertex " + std::to_string(v) + " out of range");
  }
}

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Sat:
      return "SAT";
    case SolveStatus::Unsat:
      return "UNSAT";
    case SolveStatus::BudgetExceeded:
      return "BUDGET_EXCEEDED";
  }
  return "?";
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("CRUMBY_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(std::string("CRUMBY_BUDGET is not a number: ") + env);
    }
  }
  return kDefaultBudget;
}

namespace {

constexpr signed char kUnset = -1;
constexpr signed char kRed = 0;
constexpr signed char kBlue = 1;

class Search {
 public:
  Search(const Graph& g, const Prescription& p, std::uint64_t budget,
         const std::function<bool(const Coloring&)>& visit)
      : g_(g), p_(p), budget_(budget), visit_(visit), color_(static_cast<std::size_t>(g.vertex_count()), kUnset) {
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      for (Vertex v : bfs_order(g, s)) {
        seen[static_cast<std::size_t>(v)] = 1;
        order_.push_back(v);
      }
    }
  }

  // Returns false if the search was stopped (budget or visitor).
  bool run(std::size_t depth = 0) {
    if (depth == order_.size()) {
      Coloring c(g_.vertex_count());
      for (Vertex v = 0; v < g_.vertex_count(); ++v) c[v] = color_[static_cast<std::size_t>(v)] == kRed ? Color::Red : Color::Blue;
      if (!visit_(c)) {
        stopped_by_visitor_ = true;
        return false;
      }
      return true;
    }
    const Vertex v = order_[depth];
    for (signed char c : {kRed, kBlue}) {
      if (!p_.allows(v, c == kRed ? Color::Red : Color::Blue)) continue;
      if (c == kBlue && forced_red(v)) continue;
      if (++nodes_ > budget_) {
        exceeded_ = true;
        return false;
      }
      color_[static_cast<std::size_t>(v)] = c;
      const bool ok = consistent(v);
      if (ok && !run(depth + 1)) {
        color_[static_cast<std::size_t>(v)] = kUnset;
        return false;
      }
      color_[static_cast<std::size_t>(v)] = kUnset;
    }
    return true;
  }

  std::uint64_t nodes() const { return nodes_; }
  bool exceeded() const { return exceeded_; }

 private:
  signed char at(Vertex v) const { return color_[static_cast<std::size_t>(v)]; }

  // v is the last undecided neighbour of a red vertex without a red neighbour.
  bool forced_red(Vertex v) const {
    for (Vertex u : g_.neighbors(v)) {
      if (at(u) != kRed) continue;
      bool has_red = false;
      int undecided = 0;
      for (Vertex w : g_.neighbors(u)) {
        has_red = has_red || at(w) == kRed;
        undecided += at(w) == kUnset ? 1 : 0;
      }
      if (!has_red && undecided == 1) return true;
    }
    return false;
  }

  bool vertex_ok(Vertex u) const {
    if (at(u) == kBlue) {
      int blue = 0;
      for (Vertex w : g_.neighbors(u)) blue += at(w) == kBlue ? 1 : 0;
      return blue <= 1;
    }
    if (at(u) == kRed) {
      for (Vertex w : g_.neighbors(u)) {
        if (at(w) != kBlue) return true;
      }
      return false;
    }
    return true;
  }

  bool consistent(Vertex v) {
    if (!vertex_ok(v)) return false;
    for (Vertex u : g_.neighbors(v)) {
      if (!vertex_ok(u)) return false;
    }
    if (at(v) != kRed) return true;
    // Decided red component around v; any red P4 created now lies in it.
    component_.clear();
    component_.push_back(v);
    for (std::size_t i = 0; i < component_.size(); ++i) {
      for (Vertex w : g_.neighbors(component_[i])) {
        if (at(w) == kRed && std::find(component_.begin(), component_.end(), w) == component_.end()) {
          component_.push_back(w);
        }
      }
    }
    for (Vertex b : component_) {
      for (Vertex c : g_.neighbors(b)) {
        if (c < b || at(c) != kRed) continue;
        Vertex x_only = -1;
        int xs = 0;
        bool path = false;
        for (Vertex x : g_.neighbors(b)) {
          if (x != c && at(x) == kRed) {
            ++xs;
            x_only = x;
          }
        }
        if (xs == 0) continue;
        for (Vertex y : g_.neighbors(c)) {
          if (y != b && at(y) == kRed && (xs > 1 || y != x_only)) path = true;
        }
        if (path) return false;
      }
    }
    return true;
  }

  const Graph& g_;
  const Prescription& p_;
  std::uint64_t budget_;
  const std::function<bool(const Coloring&)>& visit_;
  std::vector<signed char> color_;
  std::vector<Vertex> order_;
  std::vector<Vertex> component_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
  bool stopped_by_visitor_ = false;
};

}  // namespace

SolveResult solve_exact(const Graph& g, const Prescription& p, std::uint64_t budget) {
  p.check(g.vertex_count());
  SolveResult result;
  std::function<bool(const Coloring&)> keep_first = [&](const Coloring& c) {
    result.coloring = c;
    return false;
  };
  Search search(g, p, budget, keep_first);
  search.run();
  result.nodes = search.nodes();
  if (result.coloring) {
    result.status = SolveStatus::Sat;
  } else if (search.exceeded()) {
    result.status = SolveStatus::BudgetExceeded;
  } else {
    result.status = SolveStatus::Unsat;
  }
  return result;
}

std::uint64_t for_each_coloring(const Graph& g, const Prescription& p,
                                const std::function<bool(const Coloring&)>& visit) {
  p.check(g.vertex_count());
  Search search(g, p, UINT64_MAX, visit);
  search.run();
  return search.nodes();
}

std::uint64_t count_colorings(const Graph& g, const Prescription& p) {
  std::uint64_t count = 0;
  for_each_coloring(g, p, [&](const Coloring&) {
    ++count;
    return true;
  });
  return count;
}

std::vector<Coloring> solve_exact_all(const Graph& g, const Prescription& p) {
  std::vector<Coloring> out;
  for_each_coloring(g, p, [&](const Coloring& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

}  // namespace crumby
