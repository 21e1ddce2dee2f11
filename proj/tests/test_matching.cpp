#include <random>
#include <set>

#include "crumby/error.hpp"
#include "crumby/generators.hpp"
#include "crumby/matching.hpp"
#include "doctest.h"

using namespace crumby;

namespace {

// Maximum matching size by recursion on the lowest uncovered vertex.
int brute_nu(const Graph& g, std::vector<char>& gone, Vertex from = 0) {
  while (from < g.vertex_count() && gone[static_cast<std::size_t>(from)]) ++from;
  if (from >= g.vertex_count()) return 0;
  gone[static_cast<std::size_t>(from)] = 1;
  int best = brute_nu(g, gone, from + 1);
  for (Vertex w : g.neighbors(from)) {
    if (gone[static_cast<std::size_t>(w)]) continue;
    gone[static_cast<std::size_t>(w)] = 1;
    best = std::max(best, 1 + brute_nu(g, gone, from + 1));
    gone[static_cast<std::size_t>(w)] = 0;
  }
  gone[static_cast<std::size_t>(from)] = 0;
  return best;
}

int brute_nu(const Graph& g) {
  std::vector<char> gone(static_cast<std::size_t>(g.vertex_count()), 0);
  return brute_nu(g, gone);
}

// v is missed by some maximum matching iff removing it keeps nu.
std::vector<Vertex> brute_a(const Graph& g) {
  const int nu = brute_nu(g);
  std::vector<Vertex> out;
  std::vector<char> gone(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    gone[static_cast<std::size_t>(v)] = 1;
    if (brute_nu(g, gone) == nu) out.push_back(v);
    gone[static_cast<std::size_t>(v)] = 0;
  }
  return out;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (coin(rng)) g.add_edge(a, b);
    }
  }
  return g;
}

void check_decomposition(const Graph& g) {
  const auto d = edmonds_gallai(g);
  CHECK(d.A == brute_a(g));
  CHECK(d.matching.size() == brute_nu(g));
  CHECK(maximum_matching(g).size() == d.matching.size());
  // Every nonempty S in B reaches at least |S|+1 odd components.
  if (!d.B.empty() && d.B.size() <= 10) {
    for (std::uint32_t s = 1; s < (1u << d.B.size()); ++s) {
      std::set<int> reached;
      for (std::size_t i = 0; i < d.B.size(); ++i) {
        if (!(s >> i & 1u)) continue;
        for (Vertex w : g.neighbors(d.B[i])) {
          if (d.odd_component_of[static_cast<std::size_t>(w)] >= 0) reached.insert(d.odd_component_of[static_cast<std::size_t>(w)]);
        }
      }
      REQUIRE(static_cast<int>(reached.size()) >= std::popcount(s) + 1);
    }
  }
}

}  // namespace

TEST_CASE("maximum matching sizes") {
  CHECK(maximum_matching(make_cycle(6)).size() == 3);
  CHECK(maximum_matching(gen_petersen()).size() == 5);
  CHECK(maximum_matching(make_star(3)).size() == 1);
  CHECK(maximum_matching(Graph(0)).size() == 0);
  CHECK(maximum_matching(make_complete(5)).size() == 2);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = random_graph(4 + static_cast<int>(seed % 9), 0.1 + 0.05 * static_cast<double>(seed % 7), seed);
    const Matching m = maximum_matching(g);
    REQUIRE(is_matching(g, m));
    REQUIRE(m.size() == brute_nu(g));
  }
}

TEST_CASE("factor-critical test") {
  CHECK(hypomatchable(make_cycle(5)));
  CHECK_FALSE(hypomatchable(make_cycle(4)));
  CHECK(hypomatchable(Graph(1)));
  CHECK(hypomatchable(make_complete(3)));
  CHECK_FALSE(hypomatchable(make_path(3)));
}

TEST_CASE("decomposition of small named graphs") {
  const auto star = edmonds_gallai(make_star(3));
  CHECK(star.A == std::vector<Vertex>{1, 2, 3});
  CHECK(star.B == std::vector<Vertex>{0});
  CHECK(star.C.empty());
  CHECK(star.odd_components.size() == 3);
  CHECK(star.contracted_matching.at(0) == 0);

  const auto c6 = edmonds_gallai(make_cycle(6));
  CHECK(c6.A.empty());
  CHECK(c6.C.size() == 6);
  CHECK(c6.even_components.size() == 1);

  const auto c5 = edmonds_gallai(make_cycle(5));
  CHECK(c5.A.size() == 5);
  REQUIRE(c5.odd_components.size() == 1);
  CHECK_FALSE(c5.roles[0].saturated);
  CHECK(c5.roles[0].exposed == 0);
  CHECK_FALSE(c5.matching.covers(0));
}

TEST_CASE("decomposition against brute force") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const int n = 3 + static_cast<int>(seed % 10);
    check_decomposition(random_graph(n, 0.15 + 0.03 * static_cast<double>(seed % 10), seed * 7 + 1));
  }
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 4 + static_cast<int>(seed % 11);
    check_decomposition(gen_random_connected_subcubic(n, static_cast<int>(seed % 5), seed));
  }
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& t : enumerate_trees(n)) check_decomposition(t);
  }
}

TEST_CASE("single-vertex odd components get saturated when possible") {
  // Cubic graphs: whenever B is nonempty, a singleton odd component left
  // unsaturated would stay isolated, so every one of them is saturated.
  for (int n = 4; n <= 10; n += 2) {
    for (const Graph& g : enumerate_connected_cubic(n)) {
      const auto d = edmonds_gallai(g);
      for (std::size_t c = 0; c < d.odd_components.size(); ++c) {
        if (d.odd_components[c].size() == 1) CHECK(d.roles[c].saturated);
      }
    }
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = gen_random_cubic(8 + 2 * static_cast<int>(seed % 8), seed);
    const auto d = edmonds_gallai(g);
    for (std::size_t c = 0; c < d.odd_components.size(); ++c) {
      if (d.odd_components[c].size() == 1) CHECK(d.roles[c].saturated);
    }
  }
}

TEST_CASE("validation rejects a broken decomposition") {
  auto d = edmonds_gallai(make_star(3));
  d.B.clear();
  CHECK_THROWS_AS(validate_decomposition(make_star(3), d), InvariantViolation);
}
