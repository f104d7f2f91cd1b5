#include "unicyclic/invariants.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "unicyclic/error.hpp"

namespace unicyclic {
namespace {

constexpr std::int64_t kUnreached = -1;

void bfs_into(const Graph& g, Vertex source, std::span<std::int64_t> out) {
  std::fill(out.begin(), out.end(), kUnreached);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  queue.push_back(source);
  out[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (out[w] == kUnreached) {
        out[w] = out[v] + 1;
        queue.push_back(w);
      }
    }
  }
  if (queue.size() != g.order()) throw NotConnected();
}

}  // namespace

std::vector<std::int64_t> distances(const Graph& g, Vertex source) {
  if (source >= g.order()) {
    throw InvalidGraph("vertex " + std::to_string(source) + " out of range");
  }
  std::vector<std::int64_t> d(g.order());
  bfs_into(g, source, d);
  return d;
}

std::int64_t transmission(const Graph& g, Vertex u) {
  const auto d = distances(g, u);
  std::int64_t total = 0;
  for (auto x : d) total += x;
  return total;
}

DistanceMatrix::DistanceMatrix(const Graph& g)
    : n_(g.order()), dist_(n_ * n_), transmissions_(n_, 0) {
  if (n_ == 0) throw NotConnected();
  for (Vertex u = 0; u < n_; ++u) {
    std::span<std::int64_t> row(dist_.data() + u * n_, n_);
    bfs_into(g, u, row);
    for (auto x : row) {
      transmissions_[u] += x;
      diameter_ = std::max(diameter_, x);
    }
  }
}

std::int64_t wiener(const Graph& g) {
  const DistanceMatrix dm(g);
  std::int64_t total = 0;
  for (Vertex u = 0; u < g.order(); ++u) total += dm.transmission(u);
  return total / 2;
}

std::int64_t degree_distance(const Graph& g) {
  const DistanceMatrix dm(g);
  std::int64_t total = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    total += static_cast<std::int64_t>(g.degree(u)) * dm.transmission(u);
  }
  return total;
}

std::int64_t reverse_degree_distance(const Graph& g) {
  const DistanceMatrix dm(g);
  const auto n = static_cast<std::int64_t>(g.order());
  const auto edges = static_cast<std::int64_t>(g.edge_count());
  std::int64_t dd = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    dd += static_cast<std::int64_t>(g.degree(u)) * dm.transmission(u);
  }
  return 2 * (n - 1) * edges * dm.diameter() - dd;
}

std::int64_t first_zagreb(const Graph& g) {
  std::int64_t total = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto d = static_cast<std::int64_t>(g.degree(u));
    total += d * d;
  }
  return total;
}

std::int64_t schultz(const Graph& g) {
  return degree_distance(g) + first_zagreb(g);
}

std::int64_t diameter(const Graph& g) { return DistanceMatrix(g).diameter(); }

std::size_t pendant_count(const Graph& g) {
  std::size_t count = 0;
  for (Vertex u = 0; u < g.order(); ++u) count += g.degree(u) == 1 ? 1 : 0;
  return count;
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (Vertex u = 0; u < g.order(); ++u) best = std::max(best, g.degree(u));
  return best;
}

std::vector<Vertex> unique_cycle(const Graph& g) {
  if (!g.is_connected()) throw NotConnected();
  if (g.edge_count() != g.order()) return {};
  std::vector<std::size_t> deg(g.order());
  std::vector<bool> removed(g.order(), false);
  std::deque<Vertex> leaves;
  for (Vertex v = 0; v < g.order(); ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const Vertex v = leaves.front();
    leaves.pop_front();
    removed[v] = true;
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w] && --deg[w] == 1) leaves.push_back(w);
    }
  }
  // Walk the surviving 2-regular core.
  Vertex start = 0;
  while (removed[start]) ++start;
  std::vector<Vertex> cycle{start};
  Vertex prev = start;
  Vertex cur = start;
  for (;;) {
    Vertex next = cur;
    for (Vertex w : g.neighbors(cur)) {
      if (!removed[w] && w != prev) {
        next = w;
        break;
      }
    }
    if (next == start || next == cur) break;
    // The first step may pick either direction; prev guards the rest.
    prev = cur;
    cur = next;
    cycle.push_back(cur);
  }
  return cycle;
}

std::optional<std::size_t> unicyclic_girth(const Graph& g) {
  auto cycle = unique_cycle(g);
  if (cycle.empty()) return std::nullopt;
  return cycle.size();
}

InvariantReport structural_profile(const Graph& g) {
  const DistanceMatrix dm(g);
  InvariantReport r;
  r.n = g.order();
  r.edge_count = g.edge_count();
  r.girth = unicyclic_girth(g);
  r.diameter = dm.diameter();
  r.pendant_count = pendant_count(g);
  r.max_degree = max_degree(g);
  std::int64_t trans_sum = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    trans_sum += dm.transmission(u);
    r.degree_distance +=
        static_cast<std::int64_t>(g.degree(u)) * dm.transmission(u);
  }
  r.wiener = trans_sum / 2;
  const auto n = static_cast<std::int64_t>(r.n);
  r.reverse_degree_distance =
      2 * (n - 1) * static_cast<std::int64_t>(r.edge_count) * r.diameter -
      r.degree_distance;
  r.first_zagreb = first_zagreb(g);
  r.schultz = r.degree_distance + r.first_zagreb;
  return r;
}

std::int64_t tree_reverse_degree_distance(const Graph& g) {
  if (g.order() == 0 || g.edge_count() + 1 != g.order()) {
    throw ParameterError("tree restatement needs edge_count == n - 1");
  }
  const DistanceMatrix dm(g);
  const auto n = static_cast<std::int64_t>(g.order());
  std::int64_t w = 0;
  for (Vertex u = 0; u < g.order(); ++u) w += dm.transmission(u);
  w /= 2;
  // 4[(n-1)^2 d / 2 - W] + n(n-1), kept in integers.
  return 2 * (n - 1) * (n - 1) * dm.diameter() - 4 * w + n * (n - 1);
}

}  // namespace unicyclic
