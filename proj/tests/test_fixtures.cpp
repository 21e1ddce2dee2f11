#include <algorithm>

#include "crumby/error.hpp"
#include "crumby/fixtures.hpp"
#include "crumby/generators.hpp"
#include "crumby/oracle.hpp"
#include "crumby/verifier.hpp"
#include "doctest.h"

using namespace crumby;

namespace {

std::map<std::string, std::string, std::less<>> embedded_texts() {
  std::map<std::string, std::string, std::less<>> texts;
  for (const auto& f : fixture_files()) texts.emplace(std::string(f.name), std::string(f.text));
  return texts;
}

std::string parse_error(std::map<std::string, std::string, std::less<>> texts, const std::string& file,
                        const std::string& from, const std::string& to) {
  std::string& text = texts.at(file);
  const auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  text.replace(at, from.size(), to);
  try {
    parse_fixtures(texts);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("embedded fixtures load and validate") {
  const FixtureSet& f = fixtures();
  CHECK(f.table1.size() == 6);
  CHECK(f.cycles.size() == 6);
  CHECK(f.k4_base.size() == 729);
  CHECK(f.k4_paths.size() == 27);
  CHECK(f.merged.size() == 6);
  CHECK_FALSE(f.ears.empty());
  CHECK_FALSE(f.two_faces.empty());

  const auto five = std::find_if(f.table1.begin(), f.table1.end(), [](const Table1Row& r) { return r.k == 5; });
  REQUIRE(five != f.table1.end());
  CHECK(five->k2 == "rrbrr");
  CHECK(validate_pattern(five->k2, PatternPurpose::EndpointsInRedK2));
  CHECK(f.cycles.at(7) == "rrbrrrb");
  CHECK(f.merged.at(6) == "rrbrrr");

  int oracle = 0;
  for (const auto& file : fixture_files()) oracle += file.source == FixtureSource::Oracle ? 1 : 0;
  CHECK(oracle == 2);
}

TEST_CASE("regenerating oracle fixtures reproduces the frozen files") {
  const auto fresh = regenerate_fixtures();
  CHECK(fresh.size() == 2);
  for (const auto& file : fixture_files()) {
    if (file.source != FixtureSource::Oracle) continue;
    INFO(file.name);
    REQUIRE(fresh.count(std::string(file.name)) == 1);
    CHECK(fresh.at(std::string(file.name)) == file.text);
  }
}

TEST_CASE("cycle table entries are crumby on their cycles") {
  for (const auto& [k, colors] : fixtures().cycles) {
    CHECK(is_crumby(make_cycle(k), Coloring::from_string(colors)));
  }
}

TEST_CASE("K4 path table rows pass the verifier") {
  for (const auto& row : fixtures().k4_paths) {
    INFO(row.i << " " << row.j << " " << row.k << " : " << row.colors);
    const auto sg = gen_k4_subdivided({0, row.i, row.j, 0, row.k, 0});
    CHECK(is_crumby(sg.expanded(), k4_path_coloring(row)));
  }
}

TEST_CASE("K4 base colourings are crumby and have no red triangle") {
  for (const auto& [counts, c] : fixtures().k4_base) {
    const Graph g = gen_k4_subdivided(counts).expanded();
    REQUIRE(is_crumby(g, c));
    for (const auto& shape : component_shapes(g, c)) CHECK(shape.kind != ComponentShape::Kind::RedTriangle);
  }
}

TEST_CASE("two-squares start colourings") {
  const auto& sq = fixtures().two_squares;
  CHECK(sq[0][3] == 'r');
  CHECK(sq[1][3] == 'b');
  for (const auto& s : sq) CHECK(valid_two_face_start(2, 2, Coloring::from_string(s)));
}

TEST_CASE("ear rules hold on every synthetic neighbourhood") {
  const FixtureSet& f = fixtures();
  for (const auto& rule : f.ears) {
    INFO(rule.length << " " << rule.colors);
    CHECK(check_ear_rule(rule, f.merged).empty());
  }
}

TEST_CASE("templates expand") {
  CHECK(expand_template("(rrb)^{c-1} rrr br", 1) == "rrrbr");
  CHECK(expand_template("(rrb)^{c-1} rrr br", 3) == "rrbrrbrrrbr");
  CHECK(expand_template("(rrb)^{d} r", 0) == "r");
}

TEST_CASE("malformed fixtures are rejected with file and line") {
  const auto texts = embedded_texts();
  CHECK_NOTHROW(parse_fixtures(texts));

  const std::string typo = parse_error(texts, "cycles", "7 rrbrrrb", "7 rrbrbrb");
  CHECK(typo.find("cycles.txt") != std::string::npos);
  CHECK(typo.find("line") != std::string::npos);

  const std::string table = parse_error(texts, "table1", "rrbrr", "rrbbr");
  CHECK(table.find("table1.txt") != std::string::npos);

  auto missing = texts;
  missing.erase("k4_base");
  CHECK_THROWS_AS(parse_fixtures(missing), Error);
}
