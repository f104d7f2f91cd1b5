#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "unicyclic/graph.hpp"

namespace unicyclic {

/// Standard graph6 encoding: N(n) followed by the upper triangle of the
/// adjacency matrix in column order (x(0,1), x(0,2), x(1,2), ...), six
/// bits per printable character. Orders up to 258047 are supported.
std::string to_graph6(const Graph& g);

/// Parses one graph6 line. Accepts an optional ">>graph6<<" header and a
/// trailing '\r'/'\n'. Throws Graph6Error.
Graph from_graph6(std::string_view text);

/// One parsed line of a graph6 stream.
struct Graph6Record {
  std::size_t line_number = 0;  // 1-based
  Graph graph;
};

/// Reads every non-blank line. Lines starting with '#' are skipped.
/// Throws Graph6Error whose message starts with "line <k>: ".
std::vector<Graph6Record> read_graph6_stream(std::istream& in);

}  // namespace unicyclic
