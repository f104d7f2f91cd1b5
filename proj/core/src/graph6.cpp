#include "unicyclic/graph6.hpp"

#include <string>

#include "unicyclic/error.hpp"

namespace unicyclic {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void append_order(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
    out.push_back(static_cast<char>((n & 0x3f) + kBias));
  } else {
    throw Graph6Error("graph6 order above 258047 is not supported");
  }
}

int sextet(char c) {
  const int v = static_cast<unsigned char>(c) - kBias;
  if (v < 0 || v > 63) {
    throw Graph6Error(std::string("invalid graph6 character '") + c + "'");
  }
  return v;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  append_order(out, n);
  int bits = 0;
  int acc = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw Graph6Error("empty graph6 string");

  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(sextet(text[0]));
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == 126) {
      throw Graph6Error("graph6 orders above 258047 are not supported");
    }
    if (text.size() < 4) throw Graph6Error("truncated graph6 order field");
    n = (static_cast<std::size_t>(sextet(text[1])) << 12) |
        (static_cast<std::size_t>(sextet(text[2])) << 6) |
        static_cast<std::size_t>(sextet(text[3]));
    pos = 4;
  }

  const std::size_t pair_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected_chars = (pair_count + 5) / 6;
  if (text.size() - pos != expected_chars) {
    throw Graph6Error("graph6 body has " + std::to_string(text.size() - pos) +
                      " characters, expected " +
                      std::to_string(expected_chars) + " for n=" +
                      std::to_string(n));
  }

  std::vector<Edge> edges;
  std::size_t bit_index = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit_index) {
      const int value = sextet(text[pos + bit_index / 6]);
      if (value & (1 << (5 - bit_index % 6))) edges.emplace_back(i, j);
    }
  }
  if (bit_index % 6 != 0) {
    const int value = sextet(text[pos + bit_index / 6]);
    if (value & ((1 << (6 - bit_index % 6)) - 1)) {
      throw Graph6Error("nonzero graph6 padding bits");
    }
  }
  return Graph(n, edges);
}

std::vector<Graph6Record> read_graph6_stream(std::istream& in) {
  std::vector<Graph6Record> out;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    try {
      out.push_back({line_number, from_graph6(line)});
    } catch (const Error& e) {
      throw Graph6Error("line " + std::to_string(line_number) + ": " +
                        e.what());
    }
  }
  return out;
}

}  // namespace unicyclic
