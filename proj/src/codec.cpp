#include "crumby/codec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iterator>
#include <sstream>
#include <vector>

#include "crumby/error.hpp"

namespace crumby {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int six_bits(char ch) {
  const int value = static_cast<unsigned char>(ch);
  if (value < 63 || value > 126) {
    throw Error("graph6: character " + std::to_string(value) + " out of range 63..126");
  }
  return value - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) text.remove_prefix(kGraph6Header.size());
  if (text.empty()) throw Error("graph6: empty record");

  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != '~') {
    n = six_bits(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw Error("graph6: truncated length prefix");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | six_bits(text[i]);
    if (n < 63) throw Error("graph6: malformed length prefix (4-byte form for n < 63)");
    pos = 4;
  } else {
    if (text.size() < 8) throw Error("graph6: truncated length prefix");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | six_bits(text[i]);
    if (n < 258048) throw Error("graph6: malformed length prefix (8-byte form for n < 258048)");
    pos = 8;
  }
  if (n > (1 << 24)) throw Error("graph6: graph too large");

  const long long bit_count = n * (n - 1) / 2;
  const long long byte_count = (bit_count + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != byte_count) {
    throw Error("graph6: expected " + std::to_string(byte_count) + " data bytes, found " +
                std::to_string(text.size() - pos));
  }

  Graph g(static_cast<int>(n));
  long long bit = 0;
  int current = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (bit % 6 == 0) current = six_bits(text[pos + static_cast<std::size_t>(bit / 6)]);
      if ((current >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bit % 6 != 0) {
    const int padding_mask = (1 << (6 - bit % 6)) - 1;
    if (current & padding_mask) throw Error("graph6: nonzero padding bits");
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const long long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int current = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      current = (current << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(current + 63));
        current = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((current << (6 - filled)) + 63));
  return out;
}

namespace {

std::vector<std::vector<long long>> integer_lines(std::string_view text) {
  std::vector<std::vector<long long>> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) {
      std::vector<long long> values;
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size()) break;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc() || value < 0) {
          throw Error("edge list: expected nonnegative integers in line '" + std::string(line) + "'");
        }
        i = static_cast<std::size_t>(ptr - line.data());
        values.push_back(value);
      }
      if (values.size() != 2) throw Error("edge list: expected two integers in line '" + std::string(line) + "'");
      lines.push_back(std::move(values));
    }
    start = end + 1;
  }
  return lines;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  auto lines = integer_lines(text);
  if (lines.empty()) return Graph(0);

  long long n = -1;
  std::size_t first = 0;
  const long long hn = lines[0][0];
  const long long hm = lines[0][1];
  if (hn > 0 && static_cast<long long>(lines.size()) - 1 == hm) {
    n = hn;
    first = 1;
  }
  if (n < 0) {
    n = 0;
    for (const auto& l : lines) n = std::max({n, l[0] + 1, l[1] + 1});
  }
  if (n > (1 << 24)) throw Error("edge list: graph too large");

  Graph g(static_cast<int>(n));
  for (std::size_t i = first; i < lines.size(); ++i) {
    const auto u = lines[i][0];
    const auto v = lines[i][1];
    if (u >= n || v >= n) throw Error("edge list: index " + std::to_string(std::max(u, v)) + " >= n");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph read_graph_text(std::string_view text) {
  std::string_view body = trim(text);
  const bool single_token = !body.empty() && std::none_of(body.begin(), body.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c));
  });
  const bool numeric = std::all_of(body.begin(), body.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isspace(static_cast<unsigned char>(c)) || c == '#';
  });
  if (single_token && !numeric) return parse_graph6(body);
  return parse_edge_list(text);
}

Graph read_graph(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return read_graph_text(text);
}

}  // namespace crumby
