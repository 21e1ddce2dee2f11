#include "crumby/cli.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "crumby/classify.hpp"
#include "crumby/codec.hpp"
#include "crumby/error.hpp"
#include "crumby/fixtures.hpp"
#include "crumby/generators.hpp"
#include "crumby/k4sub.hpp"
#include "crumby/matching.hpp"
#include "crumby/oracle.hpp"
#include "crumby/outerplanar.hpp"
#include "crumby/verifier.hpp"

namespace crumby {

namespace {

using nlohmann::json;

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  const CliHooks& hooks;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream text;
  if (path == "-") {
    text << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw Error("cannot open " + path);
    text << file.rdbuf();
  }
  return text.str();
}

Color parse_color(const std::string& s) {
  if (s == "r" || s == "red" || s == "R") return Color::Red;
  if (s == "b" || s == "blue" || s == "B") return Color::Blue;
  throw Error("unknown colour '" + s + "' (use red or blue)");
}

// "v=color"; v may be "leaf" for the smallest vertex of degree 1.
Prescription parse_prescriptions(const std::vector<std::string>& specs, const Graph& g) {
  Prescription p;
  for (const std::string& spec : specs) {
    std::istringstream parts(spec);
    for (std::string one; std::getline(parts, one, ',');) {
      const auto eq = one.find('=');
      if (eq == std::string::npos) throw Error("prescription '" + one + "' is not v=color");
      const std::string name = one.substr(0, eq);
      Vertex v = -1;
      if (name == "leaf") {
        for (Vertex w = 0; w < g.vertex_count() && v < 0; ++w) {
          if (g.degree(w) == 1) v = w;
        }
        if (v < 0) throw Error("graph has no leaf");
      } else {
        try {
          std::size_t used = 0;
          v = std::stoi(name, &used);
          if (used != name.size()) throw Error("");
        } catch (const std::exception&) {
          throw Error("prescription vertex '" + name + "' is not a number");
        }
      }
      p.fixed[v] = parse_color(one.substr(eq + 1));
    }
  }
  p.check(g.vertex_count());
  return p;
}

// Nothing reaches stdout unless it passes the verifier and the prescription.
void verify_before_print(const Graph& g, const Prescription& p, Coloring& c, const CliHooks& hooks) {
  if (hooks.tamper) hooks.tamper(c);
  if (c.size() != g.vertex_count()) throw InvariantViolation("refusing to print: colouring has the wrong length");
  const auto report = verify_crumby(g, c);
  if (!report.ok) throw InvariantViolation("refusing to print a colouring that fails verification: " + report.to_text());
  if (!p.satisfied_by(c)) throw InvariantViolation("refusing to print a colouring that breaks the prescription");
}

json report_json(const VerifierReport& r) {
  json v = json::array();
  for (const auto& violation : r.violations) {
    v.push_back({{"kind", std::string(to_string(violation.kind))}, {"witness", violation.witness}, {"detail", violation.detail}});
  }
  return {{"ok", r.ok}, {"violations", v}};
}

int cmd_solve(Io& io, const std::string& input, const std::string& hint, const std::vector<std::string>& prescribe,
              const std::string& format, bool exact, std::uint64_t budget) {
  const Graph g = read_graph_text(read_input(input, io.in));
  const Prescription p = parse_prescriptions(prescribe, g);
  SolveResult r;
  std::string cls = "unknown", method = "exact", note;
  if (exact) {
    r = solve_exact(g, p, budget);
  } else {
    std::optional<GraphClass> h;
    if (!hint.empty()) {
      h = parse_graph_class(hint);
      if (!h) throw Error("unknown class '" + hint + "'");
    }
    const GraphClass c = classify(g, h);
    cls = std::string(to_string(c));
    if (c == GraphClass::Unknown) throw Error("no constructive solver for this graph; rerun with --exact to use the exact search");
    try {
      r = solve_in_class(g, c, p);
      method = cls;
    } catch (const InvariantViolation& e) {
      note = e.what();
      io.err << "warning: " << note << "; falling back to the exact search\n";
      r = solve_exact(g, p, budget);
      method = "exact-fallback";
    }
  }
  json rec{{"status", std::string(to_string(r.status))}, {"class", cls}, {"method", method}, {"nodes", r.nodes}};
  if (!note.empty()) rec["note"] = note;
  if (r.status == SolveStatus::Sat) {
    Coloring c = *r.coloring;
    verify_before_print(g, p, c, io.hooks);
    rec["coloring"] = c.to_string();
    if (format == "json") {
      io.out << rec.dump() << '\n';
    } else if (format == "dot") {
      io.out << to_dot(g, c);
    } else {
      io.out << c.to_string() << '\n';
    }
    return kExitOk;
  }
  if (format == "json") {
    io.out << rec.dump() << '\n';
  } else {
    io.out << (r.status == SolveStatus::Unsat ? "UNSAT" : "BUDGET_EXCEEDED") << '\n';
  }
  return r.status == SolveStatus::Unsat ? kExitNo : kExitError;
}

int cmd_verify(Io& io, const std::string& input, const std::string& colors, const std::string& format) {
  const Graph g = read_graph_text(read_input(input, io.in));
  const Coloring c = Coloring::from_string(colors);
  const auto report = verify_crumby(g, c);
  if (format == "json") {
    io.out << report_json(report).dump() << '\n';
  } else {
    io.out << report.to_text();
  }
  return report.ok ? kExitOk : kExitNo;
}

int cmd_count(Io& io, const std::string& input, const std::vector<std::string>& prescribe) {
  const Graph g = read_graph_text(read_input(input, io.in));
  io.out << count_colorings(g, parse_prescriptions(prescribe, g)) << '\n';
  return kExitOk;
}

void write_list(std::ostream& out, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
}

int cmd_decompose(Io& io, const std::string& input, const std::string& kind, Vertex v) {
  const Graph g = read_graph_text(read_input(input, io.in));
  if (kind == "matching") {
    const Matching m = maximum_matching(g);
    io.out << "size " << m.size() << '\n';
    for (const Edge& e : m.edges()) io.out << e.u << ' ' << e.v << '\n';
  } else if (kind == "eg") {
    io.out << edmonds_gallai(g).to_text();
  } else if (kind == "ears") {
    const auto rec = embed_outerplanar(g);
    if (!rec.ok()) throw Error("ears need a 2-connected outerplanar graph: " + rec.message);
    if (v < 0 || v >= g.vertex_count()) throw Error("vertex out of range");
    const auto& e = *rec.embedding;
    const auto d = ear_decomposition(e, v);
    io.out << "outer: ";
    write_list(io.out, e.outer_cycle);
    io.out << "\ninitial: ";
    write_list(io.out, d.initial);
    io.out << '\n';
    for (std::size_t i = 0; i < d.ears.size(); ++i) {
      const auto& ear = d.ears[i];
      io.out << "ear " << i + 1 << ": " << ear.x << ' ' << ear.y << " : ";
      write_list(io.out, ear.internal);
      io.out << '\n';
    }
  } else {
    throw Error("unknown decomposition '" + kind + "' (matching, eg, ears)");
  }
  return kExitOk;
}

int to_count(const std::string& s) {
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw Error("'" + s + "' is not a number");
  }
  if (used != s.size() || n < 0) throw Error("'" + s + "' is not a nonnegative number");
  return n;
}

std::vector<int> to_counts(const std::vector<std::string>& params) {
  std::vector<int> out;
  for (const std::string& p : params) {
    std::istringstream parts(p);
    for (std::string one; std::getline(parts, one, ',');) out.push_back(to_count(one));
  }
  return out;
}

Attachment parse_attachment(const std::string& s) {
  if (s == "k2") return Attachment::k2();
  if (s == "k13") return Attachment::k13();
  if (s.size() > 1 && s[0] == 'p') return Attachment::path(to_count(s.substr(1)));
  throw Error("unknown attachment '" + s + "' (k2, k13, pN)");
}

std::vector<Graph> generate(const std::string& family, const std::vector<std::string>& params, std::uint64_t seed) {
  const std::vector<int> n = family == "cycle-with-trees" ? std::vector<int>{} : to_counts(params);
  auto need = [&](std::size_t count) {
    if (n.size() != count) throw Error(family + " takes " + std::to_string(count) + " parameter(s)");
  };
  if (family == "prism") return need(0), std::vector<Graph>{gen_prism()};
  if (family == "petersen") return need(0), std::vector<Graph>{gen_petersen()};
  if (family == "path") return need(1), std::vector<Graph>{make_path(n[0])};
  if (family == "cycle") return need(1), std::vector<Graph>{make_cycle(n[0])};
  if (family == "complete") return need(1), std::vector<Graph>{make_complete(n[0])};
  if (family == "star") return need(1), std::vector<Graph>{make_star(n[0])};
  if (family == "k4sub") {
    need(6);
    return {gen_k4_subdivided({n[0], n[1], n[2], n[3], n[4], n[5]}).expanded()};
  }
  if (family == "tree") return need(1), std::vector<Graph>{gen_random_subcubic_tree(n[0], seed)};
  if (family == "trees") return need(1), enumerate_trees(n[0]);
  if (family == "cubic") return need(1), std::vector<Graph>{gen_random_cubic(n[0], seed)};
  if (family == "cubic-all") return need(1), enumerate_connected_cubic(n[0]);
  if (family == "bipartite-subcubic") return need(1), enumerate_connected_bipartite_subcubic(n[0]);
  if (family == "outerplanar") {
    if (n.empty() || n.size() > 2) throw Error("outerplanar takes n [max_face]");
    return {gen_random_outerplanar(n[0], n.size() == 2 ? n[1] : 6, seed)};
  }
  if (family == "fan") {
    if (n.empty()) throw Error("fan takes face sizes");
    return {gen_fan_outerplanar(n, seed)};
  }
  if (family == "cycle-with-trees") {
    if (params.empty()) throw Error("cycle-with-trees takes k and position:tree items");
    std::map<int, Attachment> att;
    for (std::size_t i = 1; i < params.size(); ++i) {
      std::istringstream parts(params[i]);
      for (std::string one; std::getline(parts, one, ',');) {
        const auto colon = one.find(':');
        if (colon == std::string::npos) throw Error("attachment '" + one + "' is not position:tree");
        att[to_count(one.substr(0, colon))] = parse_attachment(one.substr(colon + 1));
      }
    }
    return {gen_cycle_with_trees(to_count(params[0]), att)};
  }
  throw Error("unknown family '" + family + "'");
}

int cmd_gen(Io& io, const std::string& family, const std::vector<std::string>& params, std::uint64_t seed,
            const std::string& format) {
  const auto graphs = generate(family, params, seed);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (format == "edges") {
      io.out << (i ? "\n" : "") << write_edge_list(graphs[i]);
    } else {
      io.out << write_graph6(graphs[i]) << '\n';
    }
  }
  return kExitOk;
}

struct SearchOptions {
  std::vector<std::string> filters;
  int subdivide = 0;
  std::uint64_t budget = kDefaultBudget;
  int jobs = 1;
  std::string format = "json";
};

struct Verdict {
  std::string id;
  bool passes = true;
  json flags;
  SolveStatus result = SolveStatus::Unsat;
  std::uint64_t nodes = 0;
  double elapsed_ms = 0;
};

Verdict search_one(const std::string& line, const SearchOptions& opt) {
  Verdict v;
  v.id = line;
  Graph g = parse_graph6(line);
  if (opt.subdivide > 0) g = subdivide_uniform(g, opt.subdivide).expanded();
  const bool subcubic = g.is_subcubic();
  v.flags = {{"subcubic", subcubic},
             {"bipartite", is_bipartite(g)},
             {"tree", is_tree(g)},
             {"outerplanar", is_outerplanar(g)},
             {"connected", is_connected(g)}};
  v.flags["k4_minor_free"] = subcubic ? json(k4_minor_free_subcubic(g)) : json(nullptr);
  for (const std::string& f : opt.filters) {
    const std::string key = f == "k4-minor-free" ? "k4_minor_free" : f;
    if (!v.flags.contains(key)) throw Error("unknown filter '" + f + "'");
    v.passes = v.passes && v.flags[key].is_boolean() && v.flags[key].get<bool>();
  }
  if (!v.passes) return v;
  const auto start = std::chrono::steady_clock::now();
  const auto r = solve_exact(g, {}, opt.budget);
  v.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  v.result = r.status;
  v.nodes = r.nodes;
  if (r.status == SolveStatus::Sat && !is_crumby(g, *r.coloring)) {
    throw InvariantViolation("exact search returned a colouring that fails verification on " + line);
  }
  return v;
}

int cmd_search(Io& io, const std::string& input, const SearchOptions& opt) {
  for (const std::string& f : opt.filters) {
    static const std::set<std::string> known{"subcubic", "bipartite", "tree", "outerplanar", "connected", "k4-minor-free"};
    if (!known.count(f)) throw Error("unknown filter '" + f + "'");
  }
  std::unique_ptr<std::ifstream> file;
  std::istream* in = &io.in;
  if (input != "-") {
    file = std::make_unique<std::ifstream>(input);
    if (!*file) throw Error("cannot open " + input);
    in = file.get();
  }
  std::map<std::string, std::uint64_t> summary{{"graphs", 0}, {"filtered", 0}, {"sat", 0}, {"unsat", 0},
                                               {"budget_exceeded", 0}, {"malformed", 0}};
  std::vector<std::string> candidates;
  const int jobs = std::max(1, opt.jobs);
  constexpr std::size_t kBatch = 512;

  std::vector<std::string> batch;
  auto flush = [&] {
    std::vector<std::optional<Verdict>> results(batch.size());
    std::vector<std::string> errors(batch.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < batch.size();) {
        try {
          results[i] = search_one(batch[i], opt);
        } catch (const Error& e) {
          errors[i] = e.what();
        }
      }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (!results[i]) {
        ++summary["malformed"];
        io.err << "warning: skipping malformed line '" << batch[i] << "': " << errors[i] << '\n';
        continue;
      }
      const Verdict& v = *results[i];
      ++summary["graphs"];
      if (!v.passes) {
        ++summary["filtered"];
        continue;
      }
      const bool candidate = v.result == SolveStatus::Unsat && !opt.filters.empty();
      switch (v.result) {
        case SolveStatus::Sat: ++summary["sat"]; break;
        case SolveStatus::Unsat: ++summary["unsat"]; break;
        case SolveStatus::BudgetExceeded: ++summary["budget_exceeded"]; break;
      }
      if (candidate) candidates.push_back(v.id);
      if (opt.format == "json") {
        json rec{{"graph6", v.id}, {"flags", v.flags}, {"result", std::string(to_string(v.result))},
                 {"nodes", v.nodes}, {"elapsed_ms", v.elapsed_ms}};
        if (candidate) rec["counterexample_candidate"] = true;
        io.out << rec.dump() << '\n';
      } else {
        io.out << v.id << ' ' << to_string(v.result) << ' ' << v.nodes << (candidate ? " CANDIDATE" : "") << '\n';
      }
    }
    batch.clear();
  };
  for (std::string line; std::getline(*in, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    batch.push_back(line);
    if (batch.size() == kBatch) flush();
  }
  flush();
  if (opt.format == "json") {
    json s(summary);
    s["candidates"] = candidates;
    io.out << json{{"summary", s}}.dump() << '\n';
  } else {
    for (const auto& [key, value] : summary) io.out << key << ' ' << value << '\n';
    for (const auto& c : candidates) io.out << "COUNTEREXAMPLE CANDIDATE " << c << '\n';
  }
  return candidates.empty() ? kExitOk : kExitNo;
}

int cmd_fixtures(Io& io, const std::string& action, const std::string& dir) {
  const auto fresh = regenerate_fixtures();
  int differing = 0;
  for (const auto& file : fixture_files()) {
    if (file.source != FixtureSource::Oracle) continue;
    const std::string& text = fresh.at(std::string(file.name));
    const bool same = text == file.text;
    differing += same ? 0 : 1;
    if (action == "regenerate") {
      const auto path = std::filesystem::path(dir) / (std::string(file.name) + ".txt");
      std::ofstream out(path);
      if (!out) throw Error("cannot write " + path.string());
      out << text;
      io.out << path.string() << (same ? " unchanged" : " rewritten") << '\n';
    } else {
      io.out << file.name << (same ? " same" : " differs") << '\n';
    }
  }
  return action == "check" && differing > 0 ? kExitNo : kExitOk;
}

}  // namespace

std::string to_dot(const Graph& g, const Coloring& c) {
  std::vector<int> component(static_cast<std::size_t>(g.vertex_count()), -1);
  const auto shapes = component_shapes(g, c);
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    for (Vertex v : shapes[i].vertices) component[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::ostringstream out;
  out << "graph crumby {\n  node [style=filled];\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [fillcolor=" << (c.is_red(v) ? "red" : "lightblue") << ", tooltip=\"component "
        << component[static_cast<std::size_t>(v)] << "\"];\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err,
            const CliHooks& hooks) {
  Io io{in, out, err, hooks};
  CLI::App app{"Crumby colourings of subcubic graphs"};
  app.require_subcommand(1);
  const std::uint64_t env_budget = default_budget();

  std::string input = "-", hint, format = "text", colors, kind, family, action, dir = "fixtures";
  std::vector<std::string> prescribe, params;
  bool exact = false;
  std::uint64_t budget = env_budget, seed = 1;
  Vertex vertex = 0;
  SearchOptions sopt;
  sopt.budget = env_budget;
  std::string transform;

  auto* solve = app.add_subcommand("solve", "Colour a graph with the solver for its class");
  solve->add_option("input", input, "graph6 or edge-list file, - for stdin");
  solve->add_option("--class", hint, "class hint: tree, k4sub, one-subdivision, deep-subdivision, "
                                     "genuine-subdivision, outerplanar, cycle-with-trees");
  solve->add_option("--prescribe", prescribe, "v=color, repeatable or comma separated; v may be 'leaf'");
  solve->add_option("--format", format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
  solve->add_flag("--exact", exact, "use the exact search");
  solve->add_option("--budget", budget, "node budget for the exact search (default CRUMBY_BUDGET or 1e8)");

  auto* verify = app.add_subcommand("verify", "Check a colouring");
  verify->add_option("input", input, "graph file, - for stdin")->required();
  verify->add_option("coloring", colors, "r/b string in vertex order")->required();
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* count = app.add_subcommand("count", "Count crumby colourings exactly");
  count->add_option("input", input, "graph file, - for stdin");
  count->add_option("--prescribe", prescribe, "v=color");

  auto* decompose = app.add_subcommand("decompose", "Print a structural decomposition");
  decompose->add_option("input", input, "graph file, - for stdin");
  decompose->add_option("--kind", kind, "matching, eg or ears")->required();
  decompose->add_option("--vertex", vertex, "start vertex for ears");

  auto* gen = app.add_subcommand("gen", "Generate graphs");
  gen->add_option("family", family,
                  "prism, petersen, path, cycle, complete, star, k4sub, tree, trees, cubic, cubic-all, "
                  "bipartite-subcubic, outerplanar, fan, cycle-with-trees")
      ->required();
  gen->add_option("params", params, "family parameters");
  gen->add_option("--seed", seed, "random seed");
  std::string gen_format = "graph6";
  gen->add_option("--format", gen_format, "graph6 or edges")->check(CLI::IsMember({"graph6", "edges"}));

  auto* search = app.add_subcommand("search", "Exact search over a graph6 corpus");
  search->add_option("input", input, "graph6 file, - for stdin");
  search->add_option("--filter", sopt.filters, "subcubic, bipartite, tree, outerplanar, connected, k4-minor-free")
      ->delimiter(',');
  search->add_option("--budget", sopt.budget, "node budget per graph");
  search->add_option("--jobs", sopt.jobs, "worker threads");
  search->add_option("--transform", transform, "subdivide=N: search the N-subdivision of each graph");
  search->add_option("--format", sopt.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* fix = app.add_subcommand("fixtures", "Regenerate or check the oracle-generated fixtures");
  fix->add_option("action", action, "check or regenerate")->required()->check(CLI::IsMember({"check", "regenerate"}));
  fix->add_option("--dir", dir, "directory for regenerate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  try {
    if (solve->parsed()) return cmd_solve(io, input, hint, prescribe, format, exact, budget);
    if (verify->parsed()) return cmd_verify(io, input, colors, format);
    if (count->parsed()) return cmd_count(io, input, prescribe);
    if (decompose->parsed()) return cmd_decompose(io, input, kind, vertex);
    if (gen->parsed()) return cmd_gen(io, family, params, seed, gen_format);
    if (search->parsed()) {
      if (!transform.empty()) {
        if (transform.rfind("subdivide=", 0) != 0) throw Error("unknown transform '" + transform + "'");
        sopt.subdivide = to_count(transform.substr(10));
      }
      return cmd_search(io, input, sopt);
    }
    if (fix->parsed()) return cmd_fixtures(io, action, dir);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace crumby
