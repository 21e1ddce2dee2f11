#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crumby/graph.hpp"

namespace crumby {

enum class FixtureSource : std::uint8_t { Transcribed, Oracle };

std::string_view to_string(FixtureSource s);

/// One data file under fixtures/. The text is embedded at build time.
struct FixtureFile {
  std::string_view name;
  FixtureSource source;
  std::string_view text;
};

/// All fixture files in a fixed order.
std::span<const FixtureFile> fixture_files();

struct Table1Row {
  int k = 0;
  /// As written: upper case marks an unattainable aim.
  std::string singleton, k2, mixed;
};

/// One line of two_faces.txt. Residues are 1..3 (k = 3c + r), 0 for "*".
/// `min_rep`/`max_rep` bound the repetition variable (c for w, d for z).
struct TwoFaceRule {
  char part = 'w';
  int k_residue = 0;
  int l_residue = 0;
  int min_rep = 0;
  int max_rep = -1;  // -1 for unbounded
  std::string templ;
};

enum class EndStatus : std::uint8_t { Any, End, NotEnd };
enum class BlueStatus : std::uint8_t { Any, Single, Pair };

struct EarRule {
  int length = 0;
  bool rr = false;
  EndStatus x = EndStatus::Any;
  BlueStatus y = BlueStatus::Any;
  bool merged = false;
  /// Colours of x, z_1..z_l, y.
  std::string colors;
};

/// A row of the K4 path tables: counts on CA, AD, DB, and the colours
/// along C - A - D - B with branch vertices in upper case.
struct K4PathRow {
  int i = 0, j = 0, k = 0;
  std::string colors;
};

struct FixtureSet {
  std::vector<Table1Row> table1;
  std::map<int, std::string> cycles;
  std::vector<TwoFaceRule> two_faces;
  std::vector<EarRule> ears;
  std::map<int, std::string> merged;
  /// Colours of u, w_1, w_2, v, z_1, z_2 with v red (first) or blue (second).
  std::array<std::string, 2> two_squares;
  std::vector<K4PathRow> k4_paths;
  /// Keyed by counts on AB, AC, AD, BC, BD, CD; colourings of
  /// gen_k4_subdivided(counts).
  std::map<std::array<int, 6>, Coloring> k4_base;
};

/// Parses every file and validates every entry. Throws crumby::Error naming
/// the file and the offending line.
FixtureSet parse_fixtures(const std::map<std::string, std::string, std::less<>>& texts);

/// The embedded fixtures, parsed and validated once.
const FixtureSet& fixtures();

/// Expands a template such as "(rrb)^{c-1} rrr br" with the repetition
/// variable set to `rep`.
std::string expand_template(std::string_view templ, int rep);

/// The graph the two_faces and two_squares rows colour: u = 0, w_i = i,
/// v = k + 1, z_i = k + 1 + i.
Graph two_face_graph(int k, int l);

/// Checks a starting colouring of two_face_graph(k, l): crumby and no two
/// adjacent degree-2 vertices blue.
bool valid_two_face_start(int k, int l, const Coloring& c);

/// Builds the colouring of an ear rule's synthetic neighbourhood and checks
/// the rule on every matching configuration. Returns an empty string or a
/// description of the first failure.
std::string check_ear_rule(const EarRule& rule, const std::map<int, std::string>& merged);

/// Full colouring of the K4 path-table instance for a row, in
/// gen_k4_subdivided order.
Coloring k4_path_coloring(const K4PathRow& row);

/// Recomputes the oracle-generated files. Keys are file names.
std::map<std::string, std::string> regenerate_fixtures();

}  // namespace crumby
