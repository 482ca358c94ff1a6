#pragma once

#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mdsenum/errors.hpp"
#include "mdsenum/graph.hpp"

namespace mdsenum {

// Plain edge list: one "u v" pair per line, 1-based. '#' starts a comment,
// blank lines are skipped. An optional "p <n> <m>" header (DIMACS style, also
// "p edge <n> <m>") fixes the vertex count; otherwise n is the largest index
// seen. DIMACS "e u v" edge lines are accepted as well.
[[nodiscard]] inline Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::optional<Vertex> header_n;
  Vertex max_seen = 0;
  std::string line;
  std::size_t line_no = 0;

  auto fail = [&](const std::string& what) {
    throw InputError("line " + std::to_string(line_no) + ": " + what);
  };
  auto parse_index = [&](const std::string& token) -> Vertex {
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(token, &pos);
    } catch (const std::exception&) {
      fail("expected a vertex index, got '" + token + "'");
    }
    if (pos != token.size() || token.front() == '-') fail("bad vertex index '" + token + "'");
    if (value == 0) fail("vertex indices are 1-based, got 0");
    if (value > std::numeric_limits<Vertex>::max()) fail("vertex index too large");
    return static_cast<Vertex>(value);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> fields;
    for (std::string t; tokens >> t;) fields.push_back(t);
    if (fields.empty()) continue;

    if (fields[0] == "p") {
      if (header_n) fail("duplicate header");
      if (!edges.empty()) fail("header must precede the edges");
      std::size_t first = (fields.size() == 4) ? 2 : 1;
      if (fields.size() != first + 2) fail("header must be 'p <n> <m>'");
      header_n = parse_index(fields[first]);
      continue;
    }
    std::size_t first = (fields[0] == "e") ? 1 : 0;
    if (fields.size() != first + 2) fail("expected 'u v'");
    Vertex a = parse_index(fields[first]);
    Vertex b = parse_index(fields[first + 1]);
    if (header_n && (a > *header_n || b > *header_n)) {
      fail("edge " + std::to_string(a) + "-" + std::to_string(b) + " exceeds header n=" +
           std::to_string(*header_n));
    }
    max_seen = std::max({max_seen, a, b});
    edges.emplace_back(a, b);
  }
  return Graph(header_n.value_or(max_seen), edges);
}

[[nodiscard]] inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_edge_list(in);
}

[[nodiscard]] inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.n() << ' ' << g.m() << '\n';
  for (auto [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

}  // namespace mdsenum
