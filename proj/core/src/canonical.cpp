#include "unicyclic/canonical.hpp"

#include <algorithm>
#include <tuple>
#include <vector>

#include "unicyclic/error.hpp"
#include "unicyclic/graph6.hpp"
#include "unicyclic/invariants.hpp"

namespace unicyclic {
namespace {

using Coloring = std::vector<int>;

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  void run(Coloring initial) {
    Coloring c = refine(std::move(initial));
    descend(c);
  }

  const std::string& best() const { return best_; }
  const std::vector<Vertex>& best_perm() const { return best_perm_; }

 private:
  // Color refinement: repeatedly rank vertices by (own color, sorted
  // neighbor colors) until the number of cells stops growing. Ranking by
  // signature value keeps the result label-invariant.
  Coloring refine(Coloring c) const {
    std::size_t cells = count_cells(c);
    for (;;) {
      std::vector<std::pair<std::vector<int>, Vertex>> sig(n_);
      for (Vertex v = 0; v < n_; ++v) {
        auto& s = sig[v].first;
        s.reserve(g_.degree(v) + 1);
        for (Vertex w : g_.neighbors(v)) s.push_back(c[w]);
        std::sort(s.begin(), s.end());
        s.insert(s.begin(), c[v]);
        sig[v].second = v;
      }
      std::sort(sig.begin(), sig.end());
      Coloring next(n_);
      int rank = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && sig[i].first != sig[i - 1].first) ++rank;
        next[sig[i].second] = rank;
      }
      const std::size_t next_cells = static_cast<std::size_t>(rank) + 1;
      c = std::move(next);
      if (next_cells == cells) return c;
      cells = next_cells;
    }
  }

  static std::size_t count_cells(const Coloring& c) {
    Coloring sorted = c;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(
        std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }

  bool twins(Vertex x, Vertex y) const {
    auto nx = g_.neighbors(x);
    auto ny = g_.neighbors(y);
    std::vector<Vertex> a, b;
    for (Vertex w : nx) if (w != y) a.push_back(w);
    for (Vertex w : ny) if (w != x) b.push_back(w);
    return a == b;
  }

  void descend(const Coloring& c) {
    // First non-singleton cell in color order.
    std::vector<int> cell_size(n_, 0);
    for (int color : c) ++cell_size[static_cast<std::size_t>(color)];
    int target = -1;
    for (std::size_t color = 0; color < n_; ++color) {
      if (cell_size[color] > 1) {
        target = static_cast<int>(color);
        break;
      }
    }
    if (target < 0) {
      leaf(c);
      return;
    }

    std::vector<Vertex> explored;
    for (Vertex v = 0; v < n_; ++v) {
      if (c[v] != target) continue;
      // Swapping twins is an automorphism fixing every individualized
      // vertex, so v's subtree repeats an explored one.
      bool redundant = false;
      for (Vertex x : explored) {
        if (twins(x, v)) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      explored.push_back(v);

      Coloring child(n_);
      for (Vertex w = 0; w < n_; ++w) {
        child[w] = 2 * c[w] + ((c[w] == target && w != v) ? 1 : 0);
      }
      descend(refine(std::move(child)));
    }
  }

  void leaf(const Coloring& c) {
    std::vector<Vertex> perm(n_);
    for (Vertex v = 0; v < n_; ++v) perm[v] = static_cast<Vertex>(c[v]);
    std::string code = to_graph6(g_.relabeled(perm));
    if (best_.empty() || code < best_) {
      best_ = std::move(code);
      best_perm_ = std::move(perm);
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::string best_;
  std::vector<Vertex> best_perm_;
};

Coloring seed_colors(const Graph& g, std::span<const int> colors) {
  const std::size_t n = g.order();
  if (!colors.empty() && colors.size() != n) {
    throw InvalidGraph("color vector size does not match graph order");
  }
  std::vector<std::int64_t> trans(n, 0);
  if (n > 0 && g.is_connected()) {
    const DistanceMatrix dm(g);
    for (Vertex v = 0; v < n; ++v) trans[v] = dm.transmission(v);
  }
  std::vector<std::tuple<int, std::size_t, std::int64_t>> key(n);
  for (Vertex v = 0; v < n; ++v) {
    key[v] = {colors.empty() ? 0 : colors[v], g.degree(v), trans[v]};
  }
  auto sorted = key;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Coloring out(n);
  for (Vertex v = 0; v < n; ++v) {
    out[v] = static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), key[v]) -
        sorted.begin());
  }
  return out;
}

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g,
                                       std::span<const int> colors) {
  if (g.order() == 0) return {};
  CanonicalSearch search(g);
  search.run(seed_colors(g, colors));
  return search.best_perm();
}

CanonicalKey canonical_key(const Graph& g, std::span<const int> colors) {
  if (g.order() == 0) return CanonicalKey(to_graph6(g));
  CanonicalSearch search(g);
  search.run(seed_colors(g, colors));
  std::string code = search.best();
  if (!colors.empty()) {
    // Append the color sequence in canonical order so differently colored
    // copies of one graph get different keys.
    std::vector<int> ordered(g.order());
    const auto& perm = search.best_perm();
    for (Vertex v = 0; v < g.order(); ++v) ordered[perm[v]] = colors[v];
    code.push_back('|');
    for (int col : ordered) {
      code += std::to_string(col);
      code.push_back(',');
    }
  }
  return CanonicalKey(std::move(code));
}

CanonicalKey canonical_key(const Graph& g) { return canonical_key(g, {}); }

}  // namespace unicyclic
