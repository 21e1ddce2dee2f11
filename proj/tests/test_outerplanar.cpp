#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "crumby/canonical.hpp"
#include "crumby/error.hpp"
#include "crumby/fixtures.hpp"
#include "crumby/generators.hpp"
#include "crumby/oracle.hpp"
#include "crumby/outerplanar.hpp"
#include "crumby/verifier.hpp"
#include "doctest.h"

using namespace crumby;

namespace {

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.vertex_count()));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return permute(g, order);
}

bool is_rotation(const std::string& a, const std::string& b) {
  return a.size() == b.size() && (b + b).find(a) != std::string::npos;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = a; j < a + b; ++j) g.add_edge(i, j);
  }
  return g;
}

void check_solution(const Graph& g, Vertex v, Color color) {
  const Coloring c = solve_outerplanar_2conn(g, v, color);
  REQUIRE(is_crumby(g, c));
  REQUIRE(c[v] == color);
}

}  // namespace

TEST_CASE("outerplanar recognition") {
  const auto c5 = embed_outerplanar(make_cycle(5));
  REQUIRE(c5.ok());
  CHECK(c5.embedding->outer_cycle.size() == 5);
  CHECK(c5.embedding->chords.empty());
  CHECK(c5.embedding->inner_faces.size() == 1);

  Graph c4 = make_cycle(4);
  c4.add_edge(0, 2);
  const auto split = embed_outerplanar(c4);
  REQUIRE(split.ok());
  CHECK(split.embedding->chords == std::vector<Edge>{Edge(0, 2)});
  REQUIRE(split.embedding->inner_faces.size() == 2);
  for (const auto& f : split.embedding->inner_faces) CHECK(f.size() == 3);
  CHECK(split.embedding->dual_tree[0].size() == 1);

  const auto prism = embed_outerplanar(gen_prism());
  CHECK(prism.failure == OuterplanarRecognition::Failure::NotOuterplanar);
  CHECK(prism.witness.size() >= 4);
  CHECK_FALSE(is_outerplanar(gen_prism()));
  CHECK_FALSE(is_outerplanar(make_complete(4)));
  CHECK_FALSE(is_outerplanar(complete_bipartite(2, 3)));
  CHECK(is_outerplanar(make_star(3)));
  CHECK(embed_outerplanar(make_path(4)).failure == OuterplanarRecognition::Failure::NotTwoConnected);
  Graph two(6);
  two.add_edge(0, 1);
  two.add_edge(1, 2);
  two.add_edge(2, 0);
  CHECK(embed_outerplanar(two).failure == OuterplanarRecognition::Failure::NotConnected);

  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = shuffled(gen_random_outerplanar(3 + static_cast<int>(seed % 40), 3 + static_cast<int>(seed % 7), seed), rng);
    const auto r = embed_outerplanar(g);
    REQUIRE(r.ok());
    const auto& e = *r.embedding;
    REQUIRE(static_cast<int>(e.outer_cycle.size()) == g.vertex_count());
    REQUIRE(static_cast<int>(e.chords.size()) == g.edge_count() - g.vertex_count());
    REQUIRE(e.inner_faces.size() == e.chords.size() + 1);
    std::size_t dual_edges = 0;
    for (const auto& adj : e.dual_tree) dual_edges += adj.size();
    REQUIRE(dual_edges == 2 * e.chords.size());
  }
}

TEST_CASE("ear decompositions") {
  const auto single = embed_outerplanar(make_cycle(6));
  CHECK(ear_decomposition(*single.embedding, 2).ears.empty());

  Graph diamond = make_cycle(4);
  diamond.add_edge(0, 2);
  const auto d = ear_decomposition(*embed_outerplanar(diamond).embedding, 1);
  REQUIRE(d.ears.size() == 1);
  CHECK(d.ears[0].internal.size() == 1);
  CHECK(d.initial.front() == 1);

  const auto at_three = ear_decomposition(*embed_outerplanar(diamond).embedding, 0);
  CHECK(at_three.ears[0].y == 0);

  for (int f = 1; f <= 8; ++f) {
    const Graph strip = gen_fan_outerplanar(std::vector<int>(static_cast<std::size_t>(f), 4), 0);
    const auto e = embed_outerplanar(strip);
    REQUIRE(e.ok());
    CHECK(ear_decomposition(*e.embedding, 0).ears.size() == static_cast<std::size_t>(f - 1));
  }

  std::mt19937_64 rng(4);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = shuffled(gen_random_outerplanar(3 + static_cast<int>(seed % 50), 8, seed), rng);
    const auto e = embed_outerplanar(g);
    const Vertex v = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(g.vertex_count()));
    const auto dec = ear_decomposition(*e.embedding, v);
    REQUIRE(dec.initial.front() == v);
    if (g.degree(v) == 3) REQUIRE(dec.ears.front().y == v);
    std::set<Vertex> seen(dec.initial.begin(), dec.initial.end());
    int edges = static_cast<int>(dec.initial.size());
    for (const Ear& ear : dec.ears) {
      REQUIRE(g.has_edge(ear.x, ear.y));
      REQUIRE(seen.count(ear.x));
      REQUIRE(seen.count(ear.y));
      for (Vertex z : ear.internal) REQUIRE(seen.insert(z).second);
      edges += static_cast<int>(ear.internal.size()) + 1;
    }
    REQUIRE(static_cast<int>(seen.size()) == g.vertex_count());
    REQUIRE(edges == g.edge_count());
  }
}

TEST_CASE("ear rules hold on every matching neighbourhood") {
  for (const EarRule& rule : fixtures().ears) CHECK(check_ear_rule(rule, fixtures().merged).empty());
}

TEST_CASE("cycles take either colour anywhere") {
  for (int k = 3; k <= 14; ++k) {
    const Graph g = make_cycle(k);
    for (Vertex v = 0; v < k; ++v) {
      for (Color color : {Color::Red, Color::Blue}) {
        const Coloring c = solve_outerplanar_2conn(g, v, color);
        CHECK(is_crumby(g, c));
        CHECK(c[v] == color);
        if (k <= 8 && !(k == 5 && color == Color::Red)) {
          std::string around;
          for (Vertex w = 0; w < k; ++w) around += to_char(c[w]);
          const std::string table = fixtures().cycles.at(k);
          std::string reversed(around.rbegin(), around.rend());
          CHECK((is_rotation(around, table) || is_rotation(reversed, table)));
        }
      }
    }
  }
}

TEST_CASE("two-face starts") {
  for (int k = 1; k <= 13; ++k) {
    for (int l = 1; l <= 13; ++l) {
      const Graph g = two_face_graph(k, l);
      for (Color color : {Color::Red, Color::Blue}) {
        check_solution(g, 0, color);
        check_solution(g, k + 1, color);
      }
    }
  }
  // Two squares sharing an edge, both colours at a degree-3 vertex.
  const Graph squares = two_face_graph(2, 2);
  for (Color color : {Color::Red, Color::Blue}) {
    const Coloring c = solve_outerplanar_2conn(squares, 3, color);
    CHECK(c.to_string() == fixtures().two_squares[color == Color::Red ? 0 : 1]);
  }
}

TEST_CASE("outerplanar solver on random instances") {
  std::mt19937_64 rng(8);
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const int target = 3 + static_cast<int>(seed % 58);
    const int max_face = 3 + static_cast<int>((seed / 58) % 8);
    const Graph g = shuffled(gen_random_outerplanar(target, max_face, seed), rng);
    const Vertex v = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(g.vertex_count()));
    const Color color = rng() % 2 ? Color::Red : Color::Blue;
    INFO("seed " << seed);
    check_solution(g, v, color);
    if (g.vertex_count() <= 16) REQUIRE(solve_exact(g, {{v, color}}).status == SolveStatus::Sat);
  }
}

TEST_CASE("outerplanar solver rejects other graphs") {
  CHECK_THROWS_AS(solve_outerplanar_2conn(gen_prism(), 0, Color::Red), Error);
  CHECK_THROWS_AS(solve_outerplanar_2conn(make_path(5), 0, Color::Red), Error);
  Graph heavy = make_cycle(6);
  heavy.add_edge(0, 2);
  heavy.add_edge(0, 3);
  heavy.add_edge(0, 4);
  CHECK_THROWS_AS(solve_outerplanar_2conn(heavy, 1, Color::Red), Error);
}

TEST_CASE("cycles with hung trees") {
  std::map<int, Attachment> all_k2;
  for (int i = 0; i < 6; ++i) all_k2[i] = Attachment::k2();
  const Graph c6 = gen_cycle_with_trees(6, all_k2);
  const Coloring even = solve_cycle_with_trees(c6);
  CHECK(is_crumby(c6, even));
  for (int i = 0; i < 6; ++i) CHECK(even[i] != even[(i + 1) % 6]);

  const Graph c5 = make_cycle(5);
  CHECK(is_rotation(solve_cycle_with_trees(c5).to_string(), "rrrbb"));

  const Graph c7 = gen_cycle_with_trees(7, {{0, Attachment::k13()}, {3, Attachment::k13()}, {5, Attachment::k2()}});
  CHECK(is_crumby(c7, solve_cycle_with_trees(c7)));

  // Closing the walk at a red v_k next to a K_{1,3} at v_1.
  for (int k = 3; k <= 9; ++k) {
    for (int mask = 0; mask < (1 << k); ++mask) {
      for (int big = 0; big < (1 << k); ++big) {
        if ((big & ~mask) != 0) continue;
        std::map<int, Attachment> att;
        for (int i = 0; i < k; ++i) {
          if (mask >> i & 1) att[i] = (big >> i & 1) ? Attachment::k13() : Attachment::k2();
        }
        const Graph g = gen_cycle_with_trees(k, att);
        REQUIRE(is_crumby(g, solve_cycle_with_trees(g)));
      }
    }
  }

  std::mt19937_64 rng(21);
  for (int round = 0; round < 2000; ++round) {
    const int k = 3 + static_cast<int>(rng() % 12);
    std::map<int, Attachment> att;
    for (int i = 0; i < k; ++i) {
      switch (rng() % 6) {
        case 0: break;
        case 1: att[i] = Attachment::k2(); break;
        case 2: att[i] = Attachment::k13(); break;
        case 3: att[i] = Attachment::path(3 + static_cast<int>(rng() % 4)); break;
        default: {
          const Graph t = gen_random_subcubic_tree(2 + static_cast<int>(rng() % 9), rng());
          Vertex leaf = 0;
          while (t.degree(leaf) != 1) ++leaf;
          att[i] = {t, leaf};
        }
      }
    }
    const Graph g = shuffled(gen_cycle_with_trees(k, att), rng);
    const Coloring c = solve_cycle_with_trees(g);
    REQUIRE(is_crumby(g, c));
  }
  CHECK_THROWS_AS(solve_cycle_with_trees(make_path(4)), Error);
  CHECK_THROWS_AS(solve_cycle_with_trees(gen_prism()), Error);
}

TEST_CASE("hanging a tree by a leaf") {
  const Graph c6 = make_cycle(6);
  const Coloring base = Coloring::from_string("rrbrrb");
  const Graph p3 = make_path(3);
  const Coloring with_p3 = attach_tree(c6, base, p3, 0, 0);
  const Graph g = attach_graph(c6, p3, 0, 0);
  CHECK(g.vertex_count() == 8);
  CHECK(is_crumby(g, with_p3));
  CHECK(with_p3[6] == Color::Blue);

  const Coloring with_p4 = attach_tree(c6, base, make_path(4), 0, 2);
  CHECK(with_p4[6] == Color::Red);
  CHECK(is_crumby(attach_graph(c6, make_path(4), 0, 2), with_p4));

  CHECK_THROWS_AS(attach_tree(c6, base, make_path(2), 0, 0), Error);
  CHECK_THROWS_AS(attach_tree(c6, base, make_star(3), 1, 0), Error);
  CHECK_THROWS_AS(attach_tree(c6, base, make_path(3), 1, 0), Error);

  std::mt19937_64 rng(2);
  for (int round = 0; round < 500; ++round) {
    const Graph t = gen_random_subcubic_tree(3 + static_cast<int>(rng() % 12), rng());
    Vertex leaf = 0;
    while (t.degree(leaf) != 1) ++leaf;
    const Vertex x = t.neighbors(leaf)[0];
    if (t.vertex_count() == 4 && t.degree(x) == 3) continue;
    const Vertex at = static_cast<Vertex>(rng() % 6);
    REQUIRE(is_crumby(attach_graph(c6, t, leaf, at), attach_tree(c6, base, t, leaf, at)));
  }
}
