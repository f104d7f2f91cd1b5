#include "unicyclic/graph.hpp"

#include <algorithm>
#include <string>

#include "unicyclic/error.hpp"

namespace unicyclic {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InvalidGraph("edge (" + std::to_string(u) + "," +
                         std::to_string(v) + ") has a label >= " +
                         std::to_string(n));
    }
    if (u == v) {
      throw InvalidGraph("loop at vertex " + std::to_string(u));
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& row = adjacency_[v];
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
      throw InvalidGraph("parallel edge at vertex " + std::to_string(v));
    }
  }
  edge_count_ = edges.size();
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (v >= order()) {
    throw InvalidGraph("vertex " + std::to_string(v) + " out of range");
  }
  return adjacency_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

bool Graph::is_connected() const {
  if (order() == 0) return false;
  std::vector<bool> seen(order(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == order();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_pendants(Vertex v, std::size_t count) const {
  auto e = edges();
  const auto base = static_cast<Vertex>(order());
  for (std::size_t i = 0; i < count; ++i) {
    e.emplace_back(v, base + static_cast<Vertex>(i));
  }
  return Graph(order() + count, e);
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  auto e = edges();
  e.emplace_back(u, v);
  return Graph(order(), e);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != order()) {
    throw InvalidGraph("permutation size does not match graph order");
  }
  std::vector<Edge> e;
  e.reserve(edge_count_);
  for (const auto& [u, v] : edges()) e.emplace_back(perm[u], perm[v]);
  return Graph(order(), e);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) {
    e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return Graph(n, e);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return Graph(n, e);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) {
    e.emplace_back(0, static_cast<Vertex>(i));
  }
  return Graph(leaves + 1, e);
}

}  // namespace unicyclic
