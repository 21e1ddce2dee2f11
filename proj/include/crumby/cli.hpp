#pragma once

#include <functional>
#include <iosfwd>
#include <string>

#include "crumby/graph.hpp"

namespace crumby {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;     // Sat, verified, no counterexample candidate
inline constexpr int kExitNo = 1;     // Unsat, failed verification, candidate found
inline constexpr int kExitError = 2;  // bad input, budget exceeded, refused output

struct CliHooks {
  /// Called on every colouring before the print-time verification; tests use
  /// it to corrupt colourings.
  std::function<void(Coloring&)> tamper;
};

/// Runs one command line (argv[0] is the program name).
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err,
            const CliHooks& hooks = {});

/// DOT with fillcolor red or lightblue and the monochromatic component id as
/// tooltip.
std::string to_dot(const Graph& g, const Coloring& c);

}  // namespace crumby
