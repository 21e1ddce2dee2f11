#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "crumby/graph.hpp"

namespace crumby {

/// Decodes one graph6 record. A leading ">>graph6<<" header and trailing
/// whitespace are accepted. Throws crumby::Error on malformed input.
Graph parse_graph6(std::string_view text);

/// Encodes `g` as graph6 (no header, no newline). Uses the one-byte length
/// for n <= 62, the 4-byte form up to 258047 and the 8-byte form beyond.
std::string write_graph6(const Graph& g);

/// Parses "u v" lines. The first line may be an "n m" header; it is taken as a
/// header exactly when n > 0 and the remaining line count is m. Without a
/// header n is one more than the largest index.
/// Blank lines and '#' comments are ignored.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Reads a whole stream and sniffs the format: a single non-blank token line
/// is graph6, anything else is an edge list.
Graph read_graph(std::istream& in);
Graph read_graph_text(std::string_view text);

}  // namespace crumby
