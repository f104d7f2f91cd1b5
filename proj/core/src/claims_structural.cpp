// Identity checks and the two preliminary transformation lemmas.

#include <algorithm>
#include <map>
#include <set>

#include "claims.hpp"
#include "unicyclic/graph6.hpp"
#include "unicyclic/invariants.hpp"

namespace unicyclic::detail {
namespace {

constexpr int kLemma1MaxPart = 5;  // |V(M)|, |V(N)|
constexpr int kLemma1MaxTree = 4;  // |V(T)|
constexpr int kLemma2MaxBase = 7;  // |V(G_0)|
constexpr int kLemma2MaxArm = 3;   // s, t

// A connected graph with one distinguished vertex.
struct Rooted {
  Graph graph;
  Vertex root;
};

// One representative per rooted-isomorphism class.
std::vector<Rooted> rooted_connected(int order) {
  std::vector<Rooted> out;
  for (const Graph& g : enumerate_connected(order)) {
    std::set<CanonicalKey> seen;
    for (Vertex v = 0; v < g.order(); ++v) {
      std::vector<int> colors(g.order(), 0);
      colors[v] = 1;
      if (seen.insert(canonical_key(g, colors)).second) out.push_back({g, v});
    }
  }
  return out;
}

// Trees with an ordered pair of distinct marked vertices (u, v).
struct MarkedTree {
  Graph graph;
  Vertex u;
  Vertex v;
};

std::vector<MarkedTree> marked_trees(int order) {
  std::vector<MarkedTree> out;
  for (const Graph& t : enumerate_trees(order)) {
    std::set<CanonicalKey> seen;
    for (Vertex u = 0; u < t.order(); ++u) {
      for (Vertex v = 0; v < t.order(); ++v) {
        if (u == v) continue;
        std::vector<int> colors(t.order(), 0);
        colors[u] = 1;
        colors[v] = 2;
        if (seen.insert(canonical_key(t, colors)).second) {
          out.push_back({t, u, v});
        }
      }
    }
  }
  return out;
}

// Appends `part` to `edges`, mapping part's `root` to `at` and its other
// vertices to fresh labels from `next`. Returns the label map.
std::vector<Vertex> glue(std::vector<Edge>& edges, const Graph& part,
                         Vertex root, Vertex at, Vertex& next) {
  std::vector<Vertex> label(part.order());
  for (Vertex x = 0; x < part.order(); ++x) {
    label[x] = x == root ? at : next++;
  }
  for (const auto& [a, b] : part.edges()) edges.emplace_back(label[a], label[b]);
  return label;
}

void gutman_tree(ClaimContext& ctx) {
  for (int n = 1; n <= ctx.n_max(); ++n) {
    const auto nn = static_cast<std::int64_t>(n);
    for (const Graph& t : enumerate_trees(n)) {
      const std::int64_t lhs = degree_distance(t);
      const std::int64_t rhs = 4 * wiener(t) - nn * (nn - 1);
      ctx.checked();
      if (lhs != rhs) {
        ctx.fail({params({{"n", n}}), std::to_string(rhs),
                  std::to_string(lhs), {to_graph6(t)}});
      }
    }
  }
}

void rdd_tree(ClaimContext& ctx) {
  for (int n = 1; n <= ctx.n_max(); ++n) {
    for (const Graph& t : enumerate_trees(n)) {
      const std::int64_t lhs = reverse_degree_distance(t);
      const std::int64_t rhs = tree_reverse_degree_distance(t);
      ctx.checked();
      if (lhs != rhs) {
        ctx.fail({params({{"n", n}}), std::to_string(rhs),
                  std::to_string(lhs), {to_graph6(t)}});
      }
    }
  }
}

// Molecular topological index as the entry sum of A(A + D).
std::int64_t mti_by_matrices(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::int64_t>> sum(n, std::vector<std::int64_t>(n));
  for (Vertex x = 0; x < n; ++x) {
    const auto row = distances(g, x);
    for (Vertex y = 0; y < n; ++y) {
      sum[x][y] = row[y] + (g.has_edge(x, y) ? 1 : 0);
    }
  }
  std::int64_t total = 0;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex k : g.neighbors(x)) {
      for (Vertex y = 0; y < n; ++y) total += sum[k][y];
    }
  }
  return total;
}

void schultz_identity(ClaimContext& ctx) {
  auto check = [&](const Graph& g, int n) {
    const std::int64_t expected = mti_by_matrices(g);
    const std::int64_t actual = schultz(g);
    ctx.checked();
    if (expected != actual) {
      ctx.fail({params({{"n", n}}), std::to_string(expected),
                std::to_string(actual), {to_graph6(g)}});
    }
  };
  for (int n = 3; n <= ctx.n_max(); ++n) {
    const EnumerateOptions opts{ctx.options().ceiling, Strategy::Forest};
    for (const ClassMember& c : enumerate_unicyclic(n, {}, opts)) {
      check(c.graph, n);
    }
    for (const Graph& t : enumerate_trees(n)) check(t, n);
  }
}

void lemma1(ClaimContext& ctx) {
  std::map<int, std::vector<Rooted>> parts;
  for (int s = 1; s <= kLemma1MaxPart; ++s) parts[s] = rooted_connected(s);

  std::size_t isomorphic_pairs = 0;
  bool clipped = false;

  // (i): N is the single vertex v, so G is M with the tree T hung at u.
  for (int ms = 1; ms <= kLemma1MaxPart; ++ms) {
    for (int k = 2; k <= kLemma1MaxTree; ++k) {
      const int n = ms + k - 1;
      if (n > ctx.n_max()) {
        clipped = true;
        continue;
      }
      for (const Rooted& m : parts[ms]) {
        for (const RootedTree& rt : rooted_trees(k)) {
          std::vector<Edge> edges = m.graph.edges();
          Vertex next = static_cast<Vertex>(m.graph.order());
          for (std::size_t x = 1; x < rt.size(); ++x) {
            // rooted tree labels: 0 is the root, x > 0 gets next + x - 1
            const Vertex parent =
                rt.parent[x] == 0 ? m.root
                                  : next + static_cast<Vertex>(rt.parent[x]) - 1;
            edges.emplace_back(parent, next + static_cast<Vertex>(x) - 1);
          }
          const Graph g(static_cast<std::size_t>(n), edges);
          const Graph star = m.graph.with_pendants(m.root, k - 1);
          if (canonical_key(g) == canonical_key(star)) {
            ++isomorphic_pairs;
            continue;
          }
          ctx.checked();
          const std::int64_t dg = degree_distance(g);
          const std::int64_t ds = degree_distance(star);
          if (!(dg > ds)) {
            auto p = params({{"n", n}, {"M_order", ms}, {"T_order", k}});
            p.emplace(p.begin(), "case", "i");
            ctx.fail({p, "D'(G) > " + std::to_string(ds),
                      "D'(G) = " + std::to_string(dg),
                      {to_graph6(g), to_graph6(star)}});
          }
        }
      }
    }
  }

  // (ii): |V(M)|, |V(N)| >= 3.
  for (int ms = 3; ms <= kLemma1MaxPart; ++ms) {
    for (int ns = 3; ns <= kLemma1MaxPart; ++ns) {
      for (int k = 2; k <= kLemma1MaxTree; ++k) {
        const int n = ms + ns + k - 2;
        if (n > ctx.n_max()) {
          clipped = true;
          continue;
        }
        const std::vector<MarkedTree> trees = marked_trees(k);
        for (const Rooted& m : parts[ms]) {
          for (const Rooted& nn : parts[ns]) {
            for (const MarkedTree& t : trees) {
              std::vector<Edge> edges = m.graph.edges();
              Vertex next = static_cast<Vertex>(m.graph.order());
              const auto tl = glue(edges, t.graph, t.u, m.root, next);
              glue(edges, nn.graph, nn.root, tl[t.v], next);
              const Graph g(next, edges);

              std::vector<Edge> star_edges = m.graph.edges();
              Vertex star_next = static_cast<Vertex>(m.graph.order());
              glue(star_edges, nn.graph, nn.root, m.root, star_next);
              const Graph star =
                  Graph(star_next, star_edges).with_pendants(m.root, k - 1);

              ctx.checked();
              const std::int64_t dg = degree_distance(g);
              const std::int64_t ds = degree_distance(star);
              if (!(dg > ds)) {
                auto p = params(
                    {{"n", n}, {"M_order", ms}, {"N_order", ns}, {"T_order", k}});
                p.emplace(p.begin(), "case", "ii");
                ctx.fail({p, "D'(G) > " + std::to_string(ds),
                          "D'(G) = " + std::to_string(dg),
                          {to_graph6(g), to_graph6(star)}});
              }
            }
          }
        }
      }
    }
  }
  ctx.note("case (i): " + std::to_string(isomorphic_pairs) +
           " realizations with G isomorphic to G* excluded");
  if (clipped) {
    ctx.skip("realizations with more than n_max = " +
             std::to_string(ctx.n_max()) + " vertices");
  }
}

void lemma2(ClaimContext& ctx) {
  bool clipped = false;
  for (int order = 3; order <= kLemma2MaxBase; ++order) {
    if (order + 2 > ctx.n_max()) {
      clipped = true;
      break;
    }
    for (const Graph& g0 : enumerate_connected(order)) {
      std::set<CanonicalKey> seen;
      for (Vertex u = 0; u < g0.order(); ++u) {
        for (Vertex v = u + 1; v < g0.order(); ++v) {
          std::vector<int> colors(g0.order(), 0);
          colors[u] = colors[v] = 1;
          if (!seen.insert(canonical_key(g0, colors)).second) continue;

          auto attach = [&](int s, int t) {
            return g0.with_pendants(u, static_cast<std::size_t>(s))
                .with_pendants(v, static_cast<std::size_t>(t));
          };
          for (int s = 1; s <= kLemma2MaxArm; ++s) {
            for (int t = 1; t <= kLemma2MaxArm; ++t) {
              if (order + s + t > ctx.n_max()) {
                clipped = true;
                continue;
              }
              const Graph gst = attach(s, t);
              const std::int64_t mid = degree_distance(gst);
              const std::int64_t left = degree_distance(attach(s + t, 0));
              const std::int64_t right = degree_distance(attach(0, s + t));
              ctx.checked();
              if (!(mid > std::min(left, right))) {
                ctx.fail({params({{"G0_order", order},
                                  {"u", u},
                                  {"v", v},
                                  {"s", s},
                                  {"t", t}}),
                          "D'(G_{s,t}) > min(" + std::to_string(left) + ", " +
                              std::to_string(right) + ")",
                          "D'(G_{s,t}) = " + std::to_string(mid),
                          {to_graph6(g0), to_graph6(gst)}});
              }
            }
          }
        }
      }
    }
  }
  if (clipped) {
    ctx.skip("configurations with more than n_max = " +
             std::to_string(ctx.n_max()) + " vertices");
  }
}

}  // namespace

void register_structural_claims(std::vector<ClaimEntry>& out) {
  out.push_back({{"gutman-tree", "D' = 4W - n(n-1) on every tree",
                  ClaimKind::Identity, true, 1},
                 "one free tree (forest generator, rooted trees unrooted)",
                 gutman_tree});
  out.push_back({{"rdd-tree-restatement",
                  "reverse degree distance of a tree = 4[(n-1)^2 d/2 - W] + "
                  "n(n-1)",
                  ClaimKind::Identity, true, 1},
                 "one free tree", rdd_tree});
  out.push_back({{"schultz-identity",
                  "Schultz index = D' + first Zagreb = entry sum of A(A+D)",
                  ClaimKind::Identity, true, 3},
                 "one unicyclic graph or tree", schultz_identity});
  out.push_back({{"lemma1",
                  "collapsing the tree T between M and N into k-1 pendants "
                  "at u strictly lowers D'",
                  ClaimKind::Inequality, false, 3},
                 "one realization (M,u), T with (u,v), (N,v); |M|,|N| <= 5, "
                 "2 <= |T| <= 4",
                 lemma1});
  out.push_back({{"lemma2",
                  "D'(G_{s,t}) > min(D'(G_{s+t,0}), D'(G_{0,s+t}))",
                  ClaimKind::Inequality, false, 5},
                 "one (G_0, {u,v} orbit, s, t); 3 <= |G_0| <= 7, 1 <= s,t <= 3",
                 lemma2});
}

}  // namespace unicyclic::detail
