#include <random>
#include <set>

#include "crumby/error.hpp"
#include "crumby/generators.hpp"
#include "crumby/k4sub.hpp"
#include "crumby/oracle.hpp"
#include "crumby/verifier.hpp"
#include "doctest.h"

using namespace crumby;

namespace {

// K4-minor-free iff repeatedly deleting vertices of degree <= 1, dropping
// loops and parallel copies, and suppressing degree-2 vertices empties the
// multigraph.
bool series_parallel_reducible(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::multiset<int>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)].insert(e.v);
    adj[static_cast<std::size_t>(e.v)].insert(e.u);
  }
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      auto& a = adj[static_cast<std::size_t>(v)];
      if (!alive[static_cast<std::size_t>(v)]) continue;
      if (a.count(v)) {
        a.erase(v);
        changed = true;
      }
      for (auto it = a.begin(); it != a.end();) {
        const int w = *it;
        if (a.count(w) > 1) {
          a.erase(w);
          a.insert(w);
          adj[static_cast<std::size_t>(w)].erase(v);
          adj[static_cast<std::size_t>(w)].insert(v);
          changed = true;
          it = a.upper_bound(w);
        } else {
          ++it;
        }
      }
      if (a.size() <= 1) {
        for (int w : a) adj[static_cast<std::size_t>(w)].erase(adj[static_cast<std::size_t>(w)].find(v));
        a.clear();
        alive[static_cast<std::size_t>(v)] = 0;
        changed = true;
      } else if (a.size() == 2) {
        const int x = *a.begin(), y = *a.rbegin();
        auto& ax = adj[static_cast<std::size_t>(x)];
        auto& ay = adj[static_cast<std::size_t>(y)];
        ax.erase(ax.find(v));
        ay.erase(ay.find(v));
        ax.insert(y);
        ay.insert(x);
        a.clear();
        alive[static_cast<std::size_t>(v)] = 0;
        changed = true;
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (alive[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

bool branch_colours_match(const K4Counts& counts, const Coloring& c) {
  K4Counts reduced{};
  for (std::size_t e = 0; e < 6; ++e) reduced[e] = counts[e] % 3;
  const Coloring base = solve_k4_base(reduced);
  for (Vertex v = 0; v < 4; ++v) {
    if (base[v] != c[v]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("K4 base vectors") {
  const Coloring k4 = solve_k4_base({0, 0, 0, 0, 0, 0});
  CHECK(is_crumby(make_complete(4), k4));
  const auto two = gen_k4_subdivided({2, 2, 2, 2, 2, 2});
  CHECK(is_crumby(two.expanded(), solve_k4_base({2, 2, 2, 2, 2, 2})));
  CHECK_THROWS_AS(solve_k4_base({3, 0, 0, 0, 0, 0}), Error);
  CHECK_THROWS_AS(solve_k4_base({-1, 0, 0, 0, 0, 0}), Error);
}

TEST_CASE("K4 base fixture agrees with the oracle on satisfiability") {
  K4Counts counts{};
  for (int code = 0; code < 729; ++code) {
    int x = code;
    for (std::size_t e = 0; e < 6; ++e, x /= 3) counts[e] = x % 3;
    const Graph g = gen_k4_subdivided(counts).expanded();
    REQUIRE(is_crumby(g, solve_k4_base(counts)));
    if (code % 37 == 0) CHECK(solve_exact(g).status == SolveStatus::Sat);
  }
}

TEST_CASE("K4 subdivisions with counts up to 3") {
  K4ExpansionLog log;
  K4Counts counts{};
  for (int code = 0; code < 4096; ++code) {
    int x = code;
    for (std::size_t e = 0; e < 6; ++e, x /= 4) counts[e] = x % 4;
    const Coloring c = solve_k4_subdivision(counts, &log);
    REQUIRE(is_crumby(gen_k4_subdivided(counts).expanded(), c));
    REQUIRE(branch_colours_match(counts, c));
  }
  MESSAGE("insertions " << log.insertions << ", fallbacks " << log.fallbacks.size());
  CHECK(log.insertions > 0);
}

TEST_CASE("K4 subdivision examples") {
  const auto s = gen_k4_subdivided({1, 1, 1, 1, 1, 1});
  CHECK(solve_k4_subdivision({1, 1, 1, 1, 1, 1}) == solve_k4_base({1, 1, 1, 1, 1, 1}));
  CHECK(is_crumby(s.expanded(), solve_k4_subdivision({1, 1, 1, 1, 1, 1})));
  K4ExpansionLog log;
  const Coloring c = solve_k4_subdivision({3, 3, 3, 3, 3, 3}, &log);
  CHECK(log.insertions == 6);
  CHECK(is_crumby(gen_k4_subdivided({3, 3, 3, 3, 3, 3}).expanded(), c));
  CHECK_THROWS_AS(solve_k4_subdivision({0, 0, -1, 0, 0, 0}), Error);
}

TEST_CASE("random K4 subdivisions") {
  std::mt19937_64 rng(13);
  K4ExpansionLog log;
  for (int round = 0; round < 3000; ++round) {
    const int hi = round % 2 == 0 ? 6 : 10;
    K4Counts counts{};
    for (int& c : counts) c = static_cast<int>(rng() % static_cast<unsigned>(hi + 1));
    const Coloring c = solve_k4_subdivision(counts, &log);
    REQUIRE(is_crumby(gen_k4_subdivided(counts).expanded(), c));
    REQUIRE(branch_colours_match(counts, c));
  }
  MESSAGE("insertions " << log.insertions << ", fallbacks " << log.fallbacks.size());
}

TEST_CASE("topological K4 search") {
  CHECK(find_k4_subdivision(make_complete(4)).has_value());
  CHECK(find_k4_subdivision(gen_k4_subdivided({2, 0, 1, 3, 0, 1}).expanded()).has_value());
  CHECK(find_k4_subdivision(gen_prism()).has_value());
  CHECK(find_k4_subdivision(gen_petersen()).has_value());
  CHECK_FALSE(find_k4_subdivision(make_cycle(7)).has_value());
  CHECK_FALSE(find_k4_subdivision(gen_fan_outerplanar({4, 5, 3, 6}, 3)).has_value());
  Graph k33(6);
  for (Vertex a = 0; a < 3; ++a) {
    for (Vertex b = 3; b < 6; ++b) k33.add_edge(a, b);
  }
  CHECK(find_k4_subdivision(k33).has_value());
  Graph theta(5);
  theta.add_edge(0, 2);
  theta.add_edge(2, 1);
  theta.add_edge(0, 3);
  theta.add_edge(3, 1);
  theta.add_edge(0, 4);
  theta.add_edge(4, 1);
  CHECK_FALSE(find_k4_subdivision(theta).has_value());
  CHECK_THROWS_AS(k4_minor_free_subcubic(make_star(4)), Error);
}

TEST_CASE("topological K4 search agrees with series-parallel reduction") {
  std::mt19937_64 rng(5);
  int with_k4 = 0;
  for (int round = 0; round < 3000; ++round) {
    const int n = 4 + static_cast<int>(rng() % 13);
    const Graph g = gen_random_connected_subcubic(n, static_cast<int>(rng() % 8), rng());
    const bool free = k4_minor_free_subcubic(g);
    with_k4 += free ? 0 : 1;
    REQUIRE(free == series_parallel_reducible(g));
  }
  for (int n = 4; n <= 10; n += 2) {
    for (const Graph& g : enumerate_connected_cubic(n)) CHECK_FALSE(k4_minor_free_subcubic(g));
  }
  CHECK(with_k4 > 100);
  CHECK(with_k4 < 2900);
}
