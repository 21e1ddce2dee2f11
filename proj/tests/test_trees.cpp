#include "crumby/error.hpp"
#include "crumby/generators.hpp"
#include "crumby/oracle.hpp"
#include "crumby/trees.hpp"
#include "crumby/verifier.hpp"
#include "doctest.h"

using namespace crumby;

TEST_CASE("tree solver on small instances") {
  CHECK(solve_tree(make_path(3), {{1, Color::Blue}}).status == SolveStatus::Unsat);
  const auto edge = solve_tree(make_path(2), {{0, Color::Blue}});
  REQUIRE(edge.status == SolveStatus::Sat);
  CHECK(edge.coloring->to_string() == "bb");
  CHECK(solve_tree(make_star(3), {{0, Color::Blue}}).status == SolveStatus::Unsat);
  const auto single = solve_tree(Graph(1));
  REQUIRE(single.status == SolveStatus::Sat);
  CHECK(single.coloring->to_string() == "b");
  CHECK_THROWS_AS(solve_tree(make_cycle(4)), Error);
  Graph k14(5);
  for (Vertex v = 1; v < 5; ++v) k14.add_edge(0, v);
  CHECK_THROWS_AS(solve_tree(k14), Error);
}

TEST_CASE("tree state table base cases") {
  const Graph p3 = make_path(3);
  const auto table = tree_state_table(p3, 1);
  CHECK(table.states(0) == std::vector<TreeState>{TreeState::BFree, TreeState::RPend});
  const auto red_leaf = tree_state_table(p3, 1, {{0, Color::Red}});
  CHECK(red_leaf.states(0) == std::vector<TreeState>{TreeState::RPend});
  // bRb realises RPend at the root, but a root cannot accept it.
  const auto isolated = tree_state_table(p3, 1, {{0, Color::Blue}, {1, Color::Red}, {2, Color::Blue}});
  CHECK(isolated.states(1) == std::vector<TreeState>{TreeState::RPend});
  CHECK(isolated.total() == 0);
  CHECK(table.total() == count_colorings(p3));
}

TEST_CASE("tree solver agrees with the oracle on all trees up to 12 vertices") {
  for (int n = 1; n <= 12; ++n) {
    for (const Graph& t : enumerate_trees(n)) {
      REQUIRE(count_tree_colorings(t) == count_colorings(t));
      for (Vertex v = 0; v < n; ++v) {
        for (Color c : {Color::Red, Color::Blue}) {
          const Prescription p{{v, c}};
          const auto mine = solve_tree(t, p);
          const auto exact = solve_exact(t, p);
          REQUIRE(mine.status == exact.status);
          if (mine.coloring) {
            REQUIRE(is_crumby(t, *mine.coloring));
            REQUIRE(p.satisfied_by(*mine.coloring));
          }
          const bool leaf = t.degree(v) == 1;
          const bool middle_of_p3 = n == 3 && t.degree(v) == 2 && c == Color::Blue;
          if (leaf || (t.degree(v) == 2 && !middle_of_p3)) REQUIRE(mine.status == SolveStatus::Sat);
        }
      }
    }
  }
}

TEST_CASE("tree solver output is crumby on random trees") {
  for (std::uint64_t seed = 0; seed < 100000; ++seed) {
    const int n = 1 + static_cast<int>(seed % 200);
    const Graph t = gen_random_subcubic_tree(n, seed);
    const auto r = solve_tree(t);
    REQUIRE(r.status == SolveStatus::Sat);
    REQUIRE(is_crumby(t, *r.coloring));
  }
}
