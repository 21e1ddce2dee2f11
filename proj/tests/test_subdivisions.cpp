#include <random>

#include "crumby/error.hpp"
#include "crumby/generators.hpp"
#include "crumby/matching.hpp"
#include "crumby/oracle.hpp"
#include "crumby/subdivisions.hpp"
#include "crumby/verifier.hpp"
#include "doctest.h"

using namespace crumby;

namespace {

// P_k plus a red pendant leaf at each end, so the ends never need a red
// neighbour on the path. The end structure asked for becomes a prescription.
bool attainable_by_oracle(int k, bool first_k2, bool last_k2) {
  Graph g = make_path(k);
  const Vertex l0 = g.add_vertex(), l1 = g.add_vertex();
  g.add_edge(0, l0);
  g.add_edge(k - 1, l1);
  std::map<Vertex, Color> want{{0, Color::Red}, {k - 1, Color::Red}, {l0, Color::Red}, {l1, Color::Red}};
  bool conflict = false;
  auto require = [&](Vertex v, Color c) {
    auto [it, fresh] = want.emplace(v, c);
    if (!fresh && it->second != c) conflict = true;
  };
  if (first_k2) {
    require(1, Color::Red);
    if (k > 2) require(2, Color::Blue);
  } else {
    require(1, Color::Blue);
  }
  if (last_k2) {
    require(k - 2, Color::Red);
    if (k > 2) require(k - 3, Color::Blue);
  } else {
    require(k - 2, Color::Blue);
  }
  if (conflict) return false;
  Prescription p;
  p.fixed = want;
  return solve_exact(g, p).status == SolveStatus::Sat;
}

bool attainable_by_oracle(int k, PatternPurpose purpose) {
  switch (purpose) {
    case PatternPurpose::EndpointsSingletonRed:
      return attainable_by_oracle(k, false, false);
    case PatternPurpose::EndpointsInRedK2:
      return attainable_by_oracle(k, true, true);
    case PatternPurpose::MixedSingletonAndK2:
      return attainable_by_oracle(k, true, false) || attainable_by_oracle(k, false, true);
  }
  return false;
}

constexpr std::array kPurposes{PatternPurpose::EndpointsSingletonRed, PatternPurpose::EndpointsInRedK2,
                               PatternPurpose::MixedSingletonAndK2};

// Centre joined to three copies of K4 minus an edge whose ends are joined
// through one extra vertex: cubic, 16 vertices, no perfect matching.
Graph no_perfect_matching_cubic() {
  Graph g(16);
  for (int blob = 0; blob < 3; ++blob) {
    const Vertex a = 1 + 5 * blob, b = a + 1, d = a + 2, e = a + 3, s = a + 4;
    g.add_edge(a, d);
    g.add_edge(a, e);
    g.add_edge(b, d);
    g.add_edge(b, e);
    g.add_edge(d, e);
    g.add_edge(s, a);
    g.add_edge(s, b);
    g.add_edge(s, 0);
  }
  return g;
}

std::vector<int> random_counts(const Graph& g, int lo, int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(lo, hi);
  std::vector<int> counts(static_cast<std::size_t>(g.edge_count()));
  for (int& c : counts) c = pick(rng);
  return counts;
}

}  // namespace

TEST_CASE("path patterns") {
  CHECK(path_pattern(5, PatternPurpose::EndpointsInRedK2).colors == "rrbrr");
  CHECK(path_pattern(5, PatternPurpose::EndpointsInRedK2).attainable);
  const auto rrbbr = path_pattern(5, PatternPurpose::EndpointsSingletonRed);
  CHECK(rrbbr.colors == "rrbbr");
  CHECK_FALSE(rrbbr.attainable);
  CHECK(path_pattern(11, PatternPurpose::EndpointsInRedK2).colors == "rrbrrbrrbrr");
  CHECK_THROWS_AS(path_pattern(2, PatternPurpose::EndpointsInRedK2), Error);
  for (int k = 3; k <= 200; ++k) {
    for (PatternPurpose purpose : kPurposes) {
      const auto p = path_pattern(k, purpose);
      REQUIRE(static_cast<int>(p.colors.size()) == k);
      REQUIRE(p.colors.front() == 'r');
      REQUIRE(p.colors.back() == 'r');
      REQUIRE(p.attainable == validate_pattern(p.colors, purpose));
      if (k > 8) REQUIRE(p.attainable);
      // Even unattainable cells colour the path crumbily apart from the ends.
      REQUIRE((validate_pattern(p.colors, PatternPurpose::EndpointsSingletonRed) ||
               validate_pattern(p.colors, PatternPurpose::EndpointsInRedK2) ||
               validate_pattern(p.colors, PatternPurpose::MixedSingletonAndK2)));
      if (p.attainable && purpose == PatternPurpose::MixedSingletonAndK2) REQUIRE(p.colors.substr(0, 3) == "rrb");
    }
  }
}

TEST_CASE("table attainability matches exhaustive search") {
  for (int k = 3; k <= 14; ++k) {
    for (PatternPurpose purpose : kPurposes) {
      const bool expected = attainable_by_oracle(k, purpose);
      if (k <= 8) {
        CHECK_MESSAGE(path_pattern(k, purpose).attainable == expected, "k=" << k << " " << to_string(purpose));
      } else {
        CHECK(expected);
      }
    }
  }
}

TEST_CASE("1-subdivisions of cubic graphs") {
  const auto petersen = subdivide_uniform(gen_petersen(), 1);
  const Coloring c = solve_one_subdivision(petersen);
  CHECK(is_crumby(petersen.expanded(), c));
  for (const auto& s : component_shapes(petersen.expanded(), c)) {
    const bool p3 = s.kind == ComponentShape::Kind::RedStar && s.leaves == 2;
    CHECK((p3 || s.kind == ComponentShape::Kind::BlueSingleton));
  }
  const auto k4 = subdivide_uniform(make_complete(4), 1);
  CHECK(is_crumby(k4.expanded(), solve_one_subdivision(k4)));

  const Graph hard = no_perfect_matching_cubic();
  const auto d = edmonds_gallai(hard);
  CHECK(d.B == std::vector<Vertex>{0});
  CHECK(2 * d.matching.size() < hard.vertex_count());
  const auto s_hard = subdivide_uniform(hard, 1);
  CHECK(is_crumby(s_hard.expanded(), solve_one_subdivision(s_hard)));

  for (int n = 4; n <= 12; n += 2) {
    for (const Graph& g : enumerate_connected_cubic(n)) {
      const auto sg = subdivide_uniform(g, 1);
      REQUIRE(is_crumby(sg.expanded(), solve_one_subdivision(sg)));
    }
  }
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto sg = subdivide_uniform(gen_random_cubic(4 + 2 * static_cast<int>(seed % 20), seed), 1);
    REQUIRE(is_crumby(sg.expanded(), solve_one_subdivision(sg)));
  }
  CHECK_THROWS_AS(solve_one_subdivision(subdivide_uniform(make_cycle(4), 1)), Error);
  CHECK_THROWS_AS(solve_one_subdivision(subdivide_uniform(make_complete(4), 2)), Error);
}

TEST_CASE("deep subdivisions of cubic graphs") {
  const auto k4 = subdivide_uniform(make_complete(4), 2);
  CHECK(is_crumby(k4.expanded(), solve_deep_subdivision(k4)));
  const auto prism = subdivide_uniform(gen_prism(), 3);
  CHECK(is_crumby(prism.expanded(), solve_deep_subdivision(prism)));
  for (int c = 2; c <= 14; ++c) {
    for (const Graph& g : {make_complete(4), gen_prism(), gen_petersen(), no_perfect_matching_cubic()}) {
      const auto sg = subdivide_uniform(g, c);
      REQUIRE(is_crumby(sg.expanded(), solve_deep_subdivision(sg)));
    }
  }
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    const Graph g = gen_random_cubic(4 + 2 * static_cast<int>(seed % 6), seed);
    const auto sg = subdivide(g, random_counts(g, 2, 10, rng));
    REQUIRE(is_crumby(sg.expanded(), solve_deep_subdivision(sg)));
  }
  for (int n = 4; n <= 10; n += 2) {
    for (const Graph& g : enumerate_connected_cubic(n)) {
      for (int round = 0; round < 20; ++round) {
        const auto sg = subdivide(g, random_counts(g, 2, 5, rng));
        REQUIRE(is_crumby(sg.expanded(), solve_deep_subdivision(sg)));
      }
    }
  }
  CHECK_THROWS_AS(solve_deep_subdivision(subdivide_uniform(make_complete(4), 1)), Error);
}

TEST_CASE("genuine subdivisions of subcubic graphs") {
  for (int c = 0; c <= 10; ++c) {
    const auto sg = subdivide_uniform(make_path(2), c);
    CHECK(is_crumby(sg.expanded(), solve_genuine_subdivision(sg)));
  }
  const auto k13 = subdivide_uniform(make_star(3), 1);
  CHECK(is_crumby(k13.expanded(), solve_genuine_subdivision(k13)));
  const auto single = subdivide_uniform(Graph(1), 1);
  CHECK(is_crumby(single.expanded(), solve_genuine_subdivision(single)));

  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const int n = 2 + static_cast<int>(seed % 13);
    const Graph g = gen_random_connected_subcubic(n, static_cast<int>(seed % 7), seed);
    const auto sg = subdivide(g, random_counts(g, 1, 8, rng));
    const Coloring c = solve_genuine_subdivision(sg);
    REQUIRE_MESSAGE(is_crumby(sg.expanded(), c), "seed " << seed);
  }
  for (int n = 4; n <= 10; n += 2) {
    for (const Graph& g : enumerate_connected_cubic(n)) {
      for (int round = 0; round < 30; ++round) {
        const auto sg = subdivide(g, random_counts(g, 1, 6, rng));
        REQUIRE(is_crumby(sg.expanded(), solve_genuine_subdivision(sg)));
      }
    }
  }
  for (int n = 1; n <= 9; ++n) {
    for (const Graph& t : enumerate_trees(n)) {
      for (int round = 0; round < 5; ++round) {
        auto counts = random_counts(t, 1, 6, rng);
        // Edges at a leaf may stay unsubdivided.
        const auto edges = t.edges();
        for (std::size_t i = 0; i < edges.size(); ++i) {
          if ((t.degree(edges[i].u) == 1 || t.degree(edges[i].v) == 1) && rng() % 2) counts[i] = 0;
        }
        const auto sg = subdivide(t, counts);
        REQUIRE(is_crumby(sg.expanded(), solve_genuine_subdivision(sg)));
      }
    }
  }
  Graph two(5);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  two.add_edge(3, 4);
  const auto split = subdivide_uniform(two, 2);
  CHECK(is_crumby(split.expanded(), solve_genuine_subdivision(split)));
  CHECK_THROWS_AS(solve_genuine_subdivision(subdivide_uniform(make_cycle(4), 0)), Error);
}
