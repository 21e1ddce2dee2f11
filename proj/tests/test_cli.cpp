#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "crumby/cli.hpp"
#include "crumby/codec.hpp"
#include "crumby/generators.hpp"
#include "crumby/verifier.hpp"
#include "doctest.h"

using namespace crumby;
using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "", const CliHooks& hooks = {}) {
  args.insert(args.begin(), "crumby");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err, hooks);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string g6(const Graph& g) { return write_graph6(g) + "\n"; }

std::vector<json> records(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(json::parse(line));
  return out;
}

std::string corpus(int max_n) {
  std::string text;
  for (int n = 1; n <= max_n; ++n) {
    for (const Graph& g : enumerate_connected_bipartite_subcubic(n)) text += g6(g);
  }
  return text;
}

}  // namespace

TEST_CASE("solve") {
  const Run prism = run({"solve", "--exact"}, g6(gen_prism()));
  CHECK(prism.code == kExitNo);
  CHECK(prism.out == "UNSAT\n");

  const Graph sk4 = gen_k4_subdivided({1, 1, 1, 1, 1, 1}).expanded();
  const Run k4 = run({"solve", "--format", "json"}, g6(sk4));
  REQUIRE(k4.code == kExitOk);
  const json rec = json::parse(k4.out);
  CHECK(rec["class"] == "k4sub");
  CHECK(is_crumby(sk4, Coloring::from_string(rec["coloring"].get<std::string>())));

  const Run tree = run({"solve", "--prescribe", "leaf=blue"}, write_edge_list(make_path(5)));
  REQUIRE(tree.code == kExitOk);
  CHECK(tree.out.front() == 'b');
  CHECK(is_crumby(make_path(5), Coloring::from_string(tree.out.substr(0, 5))));

  const Run p3 = run({"solve", "--prescribe", "1=blue"}, g6(make_path(3)));
  CHECK(p3.code == kExitNo);

  const Run unknown = run({"solve"}, g6(gen_prism()));
  CHECK(unknown.code == kExitError);
  CHECK(unknown.err.find("--exact") != std::string::npos);

  const Run dot = run({"solve", "--format", "dot"}, g6(make_cycle(6)));
  CHECK(dot.code == kExitOk);
  CHECK(dot.out.find("fillcolor=red") != std::string::npos);
  CHECK(dot.out.find("0 -- 1;") != std::string::npos);

  CHECK(run({"solve", "--class", "tree"}, g6(make_cycle(5))).code == kExitError);
  CHECK(run({"solve", "--class", "planar"}, g6(make_cycle(5))).code == kExitError);
  CHECK(run({"solve"}, "0 0\n").code == kExitError);
  CHECK(run({"solve", "--exact", "--budget", "3"}, g6(gen_petersen())).code == kExitError);
}

TEST_CASE("no colouring is printed without passing verification") {
  CliHooks flip;
  flip.tamper = [](Coloring& c) {
    for (Vertex v = 0; v < c.size(); ++v) c[v] = Color::Blue;
  };
  for (const Graph& g : {make_cycle(6), make_path(7), gen_k4_subdivided({1, 2, 0, 1, 3, 1}).expanded()}) {
    const Run r = run({"solve"}, g6(g), flip);
    CHECK(r.code == kExitError);
    CHECK(r.out.empty());
    CHECK(r.err.find("refusing") != std::string::npos);
    const Run exact = run({"solve", "--exact"}, g6(g), flip);
    CHECK(exact.code == kExitError);
    CHECK(exact.out.empty());
  }
  CliHooks shorten;
  shorten.tamper = [](Coloring& c) { c = Coloring(c.size() - 1); };
  CHECK(run({"solve"}, g6(make_cycle(6)), shorten).out.empty());
}

TEST_CASE("verify") {
  const std::string c6 = g6(make_cycle(6));
  CHECK(run({"verify", "-", "rrbrrb"}, c6).out == "ok\n");
  const Run bad = run({"verify", "-", "rbrbrb"}, c6);
  CHECK(bad.code == kExitNo);
  CHECK(bad.out == "RedIsolated 0\nRedIsolated 2\nRedIsolated 4\n");
  CHECK(run({"verify", "-", "rbr"}, g6(make_path(3))).out == "RedIsolated 0\nRedIsolated 2\n");
  const json j = json::parse(run({"verify", "-", "rbrbrb", "--format", "json"}, c6).out);
  CHECK(j["violations"].size() == 3);
  CHECK(run({"verify", "-", "rrb"}, c6).code == kExitError);
  CHECK(run({"verify", "-", "rrxrrb"}, c6).code == kExitError);
}

TEST_CASE("count and decompose") {
  CHECK(run({"count"}, g6(make_complete(2))).out == "2\n");
  CHECK(run({"count"}, g6(gen_prism())).out == "0\n");
  CHECK(run({"count", "--prescribe", "0=r"}, g6(make_complete(2))).out == "1\n");

  const Run eg = run({"decompose", "--kind", "eg"}, g6(make_star(3)));
  CHECK(eg.out.rfind("A: 1 2 3\nB: 0\n", 0) == 0);
  const Run m = run({"decompose", "--kind", "matching"}, g6(make_cycle(6)));
  CHECK(m.out.rfind("size 3\n", 0) == 0);
  const Run ears = run({"decompose", "--kind", "ears"}, g6(gen_fan_outerplanar({4, 5, 3, 4}, 2)));
  CHECK(ears.code == kExitOk);
  CHECK(std::count(ears.out.begin(), ears.out.end(), '\n') == 5);
  CHECK(run({"decompose", "--kind", "ears"}, g6(gen_prism())).code == kExitError);
  CHECK(run({"decompose", "--kind", "tree"}, g6(gen_prism())).code == kExitError);
}

TEST_CASE("gen") {
  CHECK(run({"gen", "prism"}).out == g6(gen_prism()));
  CHECK(run({"gen", "k4sub", "1", "1", "1", "1", "1", "1"}).out == g6(subdivide_uniform(make_complete(4), 1).expanded()));
  CHECK(run({"gen", "k4sub", "1,1,1,1,1,1"}).out == run({"gen", "k4sub", "1", "1", "1", "1", "1", "1"}).out);
  // Subcubic trees on 4..9 vertices: 2, 2, 4, 6, 11, 18.
  const std::vector<long> trees{2, 2, 4, 6, 11, 18};
  for (int n = 4; n <= 9; ++n) {
    const std::string out = run({"gen", "trees", std::to_string(n)}).out;
    CHECK(std::count(out.begin(), out.end(), '\n') == trees[static_cast<std::size_t>(n - 4)]);
  }
  CHECK(run({"gen", "tree", "12", "--seed", "4"}).out == run({"gen", "tree", "12", "--seed", "4"}).out);
  CHECK(run({"gen", "cubic", "7"}).code == kExitError);
  CHECK(run({"gen", "moebius"}).code == kExitError);
  CHECK(run({"gen", "cycle-with-trees", "5", "0:k2,2:p4"}).code == kExitOk);
  CHECK(run({"gen", "path", "3", "--format", "edges"}).out == write_edge_list(make_path(3)));
}

TEST_CASE("search") {
  const Run empty = run({"search"}, "");
  CHECK(empty.code == kExitOk);
  const auto e = records(empty.out);
  REQUIRE(e.size() == 1);
  CHECK(e[0]["summary"]["graphs"] == 0);
  CHECK(e[0]["summary"]["unsat"] == 0);

  const Run prism = run({"search"}, g6(gen_prism()) + g6(make_cycle(6)));
  const auto p = records(prism.out);
  REQUIRE(p.size() == 3);
  CHECK(p[0]["result"] == "UNSAT");
  CHECK(p[2]["summary"]["unsat"] == 1);
  CHECK(prism.code == kExitOk);

  const Run filtered = run({"search", "--filter", "bipartite"}, g6(gen_prism()) + g6(make_cycle(6)));
  CHECK(records(filtered.out).back()["summary"]["filtered"] == 1);
  CHECK(filtered.code == kExitOk);

  const Run flagged = run({"search", "--filter", "subcubic"}, g6(gen_prism()));
  CHECK(flagged.code == kExitNo);
  CHECK(records(flagged.out).back()["summary"]["candidates"][0] == write_graph6(gen_prism()));

  const Run malformed = run({"search"}, "not graph6 at all\n" + g6(make_cycle(5)) + "@@@@@@@\n");
  CHECK(records(malformed.out).back()["summary"]["malformed"] == 2);
  CHECK(malformed.err.find("warning") != std::string::npos);

  CHECK(run({"search", "--filter", "planar"}, g6(make_cycle(5))).code == kExitError);
}

TEST_CASE("search over 1-subdivisions of cubic graphs finds no Unsat") {
  std::string text;
  for (int n = 4; n <= 10; n += 2) {
    for (const Graph& g : enumerate_connected_cubic(n)) text += g6(g);
  }
  const Run r = run({"search", "--transform", "subdivide=1", "--filter", "bipartite", "--jobs", "3"}, text);
  CHECK(r.code == kExitOk);
  const auto s = records(r.out).back()["summary"];
  CHECK(s["graphs"] == 1 + 2 + 5 + 19);
  CHECK(s["sat"] == 27);
  CHECK(s["unsat"] == 0);
}

TEST_CASE("search verdicts do not depend on the number of jobs") {
  const std::string text = corpus(8) + g6(gen_prism());
  auto verdicts = [&](const std::string& jobs) {
    const Run r = run({"search", "--jobs", jobs}, text);
    auto recs = records(r.out);
    const json summary = recs.back();
    recs.pop_back();
    std::vector<std::string> out;
    for (auto& rec : recs) {
      rec.erase("elapsed_ms");
      out.push_back(rec.dump());
    }
    std::sort(out.begin(), out.end());
    return std::make_pair(out, summary.dump());
  };
  const auto one = verdicts("1");
  const auto four = verdicts("4");
  CHECK(one.first.size() > 50);
  CHECK(one.first == four.first);
  CHECK(one.second == four.second);
}

TEST_CASE("fixtures command") {
  const Run r = run({"fixtures", "check"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("k4_base same") != std::string::npos);
  CHECK(run({"fixtures", "rebuild"}).code == kExitError);
}
