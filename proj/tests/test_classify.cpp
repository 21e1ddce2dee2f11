#include <numeric>
#include <random>

#include "crumby/canonical.hpp"
#include "crumby/classify.hpp"
#include "crumby/error.hpp"
#include "crumby/generators.hpp"
#include "crumby/k4sub.hpp"
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

void check_solves(const Graph& g, GraphClass expected) {
  CHECK(classify(g) == expected);
  const auto r = solve_in_class(g, expected);
  REQUIRE(r.status == SolveStatus::Sat);
  CHECK(is_crumby(g, *r.coloring));
}

}  // namespace

TEST_CASE("class names round-trip") {
  for (int i = 0; i <= static_cast<int>(GraphClass::Unknown); ++i) {
    const auto c = static_cast<GraphClass>(i);
    CHECK(parse_graph_class(to_string(c)) == c);
  }
  CHECK_FALSE(parse_graph_class("planar").has_value());
}

TEST_CASE("classification priority") {
  CHECK(classify(make_path(5)) == GraphClass::Tree);
  const Graph sk4 = gen_k4_subdivided({1, 1, 1, 1, 1, 1}).expanded();
  CHECK(classify(sk4) == GraphClass::K4Subdivision);
  CHECK(in_class(sk4, GraphClass::OneSubdivisionOfCubic));
  CHECK(classify(sk4, GraphClass::OneSubdivisionOfCubic) == GraphClass::OneSubdivisionOfCubic);
  CHECK(classify(gen_prism()) == GraphClass::Unknown);
  CHECK(classify(make_cycle(5)) == GraphClass::TwoConnectedOuterplanar);
  CHECK(classify(subdivide_uniform(gen_petersen(), 1).expanded()) == GraphClass::OneSubdivisionOfCubic);
  CHECK(classify(subdivide_uniform(gen_petersen(), 2).expanded()) == GraphClass::DeepSubdivision);
  CHECK(classify(gen_cycle_with_trees(5, {{0, Attachment::k13()}})) == GraphClass::CycleWithTrees);
  CHECK_THROWS_AS(classify(gen_prism(), GraphClass::Tree), Error);
  CHECK_THROWS_AS(classify(make_path(4), GraphClass::TwoConnectedOuterplanar), Error);
  CHECK(classify(make_path(4), GraphClass::Unknown) == GraphClass::Unknown);
}

TEST_CASE("dispatch solves every class on relabelled inputs") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 40; ++round) {
    check_solves(shuffled(gen_random_subcubic_tree(3 + round, rng()), rng), GraphClass::Tree);
    K4Counts counts{};
    for (int& c : counts) c = static_cast<int>(rng() % 7);
    counts[0] = std::max(counts[0], 2);
    check_solves(shuffled(gen_k4_subdivided(counts).expanded(), rng), GraphClass::K4Subdivision);
    const Graph cubic = gen_random_cubic(6 + 2 * (round % 5), rng());
    check_solves(shuffled(subdivide_uniform(cubic, 1).expanded(), rng), GraphClass::OneSubdivisionOfCubic);
    std::vector<int> deep(static_cast<std::size_t>(cubic.edge_count()));
    for (int& c : deep) c = 2 + static_cast<int>(rng() % 5);
    check_solves(shuffled(subdivide(cubic, deep).expanded(), rng), GraphClass::DeepSubdivision);
    const Graph base = gen_random_connected_subcubic(8, 6, rng());
    std::vector<int> genuine(static_cast<std::size_t>(base.edge_count()));
    for (int& c : genuine) c = 1 + static_cast<int>(rng() % 4);
    genuine[0] = 1;
    const Graph gs = subdivide(base, genuine).expanded();
    if (classify(gs) == GraphClass::GenuineSubdivision) check_solves(shuffled(gs, rng), GraphClass::GenuineSubdivision);
    check_solves(shuffled(gen_random_outerplanar(10 + round, 6, rng()), rng), GraphClass::TwoConnectedOuterplanar);
  }
}

TEST_CASE("prescriptions through dispatch") {
  const auto tree = solve_in_class(make_path(5), GraphClass::Tree, {{0, Color::Blue}});
  REQUIRE(tree.status == SolveStatus::Sat);
  CHECK(tree.coloring->is_blue(0));
  CHECK(solve_in_class(make_path(3), GraphClass::Tree, {{1, Color::Blue}}).status == SolveStatus::Unsat);
  const auto op = solve_in_class(make_cycle(7), GraphClass::TwoConnectedOuterplanar, {{3, Color::Blue}});
  CHECK(op.coloring->is_blue(3));
  CHECK_THROWS_AS(solve_in_class(make_cycle(7), GraphClass::TwoConnectedOuterplanar,
                                 {{3, Color::Blue}, {4, Color::Blue}}),
                  Error);
  CHECK_THROWS_AS(solve_in_class(gen_prism(), GraphClass::Unknown), Error);
  CHECK_THROWS_AS(solve_in_class(make_path(3), GraphClass::Tree, {{7, Color::Blue}}), Error);
}
