#pragma once

// Text graph files: "V E", then E lines "u v" (0-based; repeats are parallel
// edges, "u u" is a loop). Two-terminal files put "s t" on the second line.

#include "graph.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace mwsp {

namespace detail {

inline std::vector<std::vector<long long>> read_number_lines(std::istream& in) {
  std::vector<std::vector<long long>> lines;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<long long> nums;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) {
        throw GraphError("graph file: not an integer: '" + tok + "'");
      }
      nums.push_back(v);
    }
    if (!nums.empty()) lines.push_back(std::move(nums));
  }
  return lines;
}

inline int to_int(long long v) {
  if (v < 0 || v > 1'000'000) throw GraphError("graph file: value out of range");
  return static_cast<int>(v);
}

struct ParsedGraph {
  Multigraph graph;
  std::optional<std::pair<VertexId, VertexId>> terminals;
};

inline ParsedGraph parse_graph(std::istream& in) {
  const auto lines = read_number_lines(in);
  if (lines.empty() || lines[0].size() != 2) {
    throw GraphError("graph file: first line must be 'V E'");
  }
  const int n = to_int(lines[0][0]);
  const int m = to_int(lines[0][1]);
  const std::size_t rest = lines.size() - 1;
  std::size_t first_edge = 1;
  ParsedGraph out{Multigraph(n), std::nullopt};
  if (rest == static_cast<std::size_t>(m) + 1) {
    if (lines[1].size() != 2) throw GraphError("graph file: bad terminal line");
    out.terminals = {to_int(lines[1][0]), to_int(lines[1][1])};
    first_edge = 2;
  } else if (rest != static_cast<std::size_t>(m)) {
    throw GraphError("graph file: expected " + std::to_string(m) +
                     " edge lines, found " + std::to_string(rest));
  }
  for (std::size_t i = first_edge; i < lines.size(); ++i) {
    if (lines[i].size() != 2) throw GraphError("graph file: bad edge line");
    out.graph.add_edge(to_int(lines[i][0]), to_int(lines[i][1]));
  }
  return out;
}

}  // namespace detail

/// Reads either variant; the terminal line, if present, is ignored.
inline Multigraph read_graph(std::istream& in) {
  return detail::parse_graph(in).graph;
}

inline TwoTerminalGraph read_two_terminal(std::istream& in) {
  auto parsed = detail::parse_graph(in);
  if (!parsed.terminals) throw GraphError("graph file: missing 's t' line");
  return {std::move(parsed.graph), parsed.terminals->first,
          parsed.terminals->second};
}

inline void write_graph(std::ostream& os, const Multigraph& g) {
  os << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

inline void write_two_terminal(std::ostream& os, const TwoTerminalGraph& g) {
  os << g.graph().num_vertices() << ' ' << g.graph().num_edges() << '\n'
     << g.source() << ' ' << g.sink() << '\n';
  for (const Edge& e : g.graph().edges()) os << e.u << ' ' << e.v << '\n';
}

}  // namespace mwsp
