#include "unicyclic/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

#include "unicyclic/error.hpp"
#include "unicyclic/graph6.hpp"

namespace unicyclic {
namespace {

using KeyedGraphs = std::map<CanonicalKey, Graph>;

std::vector<Graph> values_of(KeyedGraphs&& keyed) {
  std::vector<Graph> out;
  out.reserve(keyed.size());
  for (auto& [key, g] : keyed) out.push_back(std::move(g));
  return out;
}

void insert_canonical(KeyedGraphs& into, Graph g) {
  CanonicalKey key = canonical_key(g);
  into.try_emplace(std::move(key), std::move(g));
}

Graph tree_graph(const RootedTree& t) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < t.size(); ++v) {
    edges.emplace_back(static_cast<Vertex>(t.parent[v]),
                       static_cast<Vertex>(v));
  }
  return Graph(t.size(), edges);
}

// Free trees by leaf addition, independent of the rooted generator.
const std::vector<Graph>& leaf_added_trees(int n) {
  static std::mutex mutex;
  static std::vector<std::vector<Graph>> levels{{}, {Graph(1, {})}};
  std::lock_guard lock(mutex);
  while (static_cast<int>(levels.size()) <= n) {
    KeyedGraphs next;
    for (const Graph& t : levels.back()) {
      for (Vertex v = 0; v < t.order(); ++v) {
        insert_canonical(next, t.with_pendants(v, 1));
      }
    }
    levels.push_back(values_of(std::move(next)));
  }
  return levels[static_cast<std::size_t>(n)];
}

// Lexicographically smallest among all rotations and reflections.
bool dihedral_minimal(const std::vector<int>& c) {
  const std::size_t m = c.size();
  for (int dir : {1, -1}) {
    for (std::size_t shift = 0; shift < m; ++shift) {
      for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j =
            dir == 1 ? (shift + i) % m : (shift + m - i) % m;
        if (c[j] != c[i]) {
          if (c[j] < c[i]) return false;
          break;
        }
      }
    }
  }
  return true;
}

void for_each_composition(int total, int parts, std::vector<int>& current,
                          const std::function<void()>& visit) {
  if (static_cast<int>(current.size()) == parts - 1) {
    current.push_back(total);
    visit();
    current.pop_back();
    return;
  }
  for (int x = 0; x <= total; ++x) {
    current.push_back(x);
    for_each_composition(total - x, parts, current, visit);
    current.pop_back();
  }
}

KeyedGraphs forest_unit(int n, int m) {
  KeyedGraphs out;
  std::vector<int> parts;
  for_each_composition(n - m, m, parts, [&] {
    if (!dihedral_minimal(parts)) return;
    std::vector<const RootedTree*> choice(static_cast<std::size_t>(m));
    std::function<void(int)> pick = [&](int i) {
      if (i == m) {
        std::vector<Edge> edges;
        for (int v = 0; v < m; ++v) {
          edges.emplace_back(static_cast<Vertex>(v),
                             static_cast<Vertex>((v + 1) % m));
        }
        Vertex next = static_cast<Vertex>(m);
        for (int v = 0; v < m; ++v) {
          const RootedTree& t = *choice[static_cast<std::size_t>(v)];
          std::vector<Vertex> label(t.size());
          label[0] = static_cast<Vertex>(v);
          for (std::size_t x = 1; x < t.size(); ++x) {
            label[x] = next++;
            edges.emplace_back(label[static_cast<std::size_t>(t.parent[x])],
                               label[x]);
          }
        }
        insert_canonical(out, Graph(static_cast<std::size_t>(n), edges));
        return;
      }
      for (const RootedTree& t : rooted_trees(parts[i] + 1)) {
        choice[static_cast<std::size_t>(i)] = &t;
        pick(i + 1);
      }
    };
    pick(0);
  });
  return out;
}

KeyedGraphs tree_edge_unit(const std::vector<Graph>& trees, std::size_t begin,
                           std::size_t end) {
  KeyedGraphs out;
  for (std::size_t i = begin; i < end; ++i) {
    const Graph& t = trees[i];
    for (Vertex u = 0; u < t.order(); ++u) {
      for (Vertex v = u + 1; v < t.order(); ++v) {
        if (!t.has_edge(u, v)) insert_canonical(out, t.with_edge(u, v));
      }
    }
  }
  return out;
}

std::vector<Graph> generate_unicyclic(int n, Strategy strategy) {
  std::vector<std::future<KeyedGraphs>> units;
  if (strategy == Strategy::Forest) {
    for (int m = 3; m <= n; ++m) {
      units.push_back(std::async(std::launch::async, forest_unit, n, m));
    }
  } else {
    const std::vector<Graph>& trees = leaf_added_trees(n);
    const std::size_t workers =
        std::max<std::size_t>(1, std::thread::hardware_concurrency());
    const std::size_t chunk = (trees.size() + workers - 1) / workers;
    for (std::size_t b = 0; b < trees.size(); b += chunk) {
      units.push_back(std::async(std::launch::async, tree_edge_unit,
                                 std::cref(trees), b,
                                 std::min(trees.size(), b + chunk)));
    }
  }
  KeyedGraphs merged;
  for (auto& unit : units) merged.merge(unit.get());
  return values_of(std::move(merged));
}

using Catalog = std::shared_ptr<const std::vector<ClassMember>>;

Catalog catalog(int n, Strategy strategy) {
  static std::mutex mutex;
  static std::map<std::pair<int, Strategy>, Catalog> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, strategy}];
  if (!slot) {
    auto members = std::make_shared<std::vector<ClassMember>>();
    for (Graph& g : generate_unicyclic(n, strategy)) {
      CanonicalKey key = canonical_key(g);
      InvariantReport report = structural_profile(g);
      members->push_back({std::move(g), std::move(key), report});
    }
    slot = std::move(members);
  }
  return slot;
}

}  // namespace

const std::vector<RootedTree>& rooted_trees(int size) {
  if (size < 1) throw ParameterError("rooted tree size must be >= 1");
  static std::mutex mutex;
  static std::vector<std::vector<RootedTree>> levels{{}, {RootedTree{{-1}}}};
  std::lock_guard lock(mutex);
  while (static_cast<int>(levels.size()) <= size) {
    std::map<std::string, RootedTree> next;
    for (const RootedTree& t : levels.back()) {
      for (std::size_t v = 0; v < t.size(); ++v) {
        RootedTree grown = t;
        grown.parent.push_back(static_cast<int>(v));
        next.try_emplace(ahu_code(grown), std::move(grown));
      }
    }
    std::vector<RootedTree> level;
    for (auto& [code, t] : next) level.push_back(std::move(t));
    levels.push_back(std::move(level));
  }
  return levels[static_cast<std::size_t>(size)];
}

std::string ahu_code(const RootedTree& t) {
  std::vector<std::vector<std::string>> child_codes(t.size());
  std::vector<std::string> code(t.size());
  for (std::size_t v = t.size(); v-- > 0;) {
    auto& kids = child_codes[v];
    std::sort(kids.begin(), kids.end());
    code[v] = "(";
    for (const auto& k : kids) code[v] += k;
    code[v] += ")";
    if (v > 0) {
      child_codes[static_cast<std::size_t>(t.parent[v])].push_back(code[v]);
    }
  }
  return t.size() == 0 ? std::string{} : code[0];
}

std::string to_string(Strategy s) {
  return s == Strategy::Forest ? "forest" : "tree-edge";
}

Strategy parse_strategy(const std::string& text) {
  if (text == "forest") return Strategy::Forest;
  if (text == "tree-edge") return Strategy::TreeEdge;
  throw ParameterError("unknown strategy '" + text +
                       "' (expected forest or tree-edge)");
}

std::vector<Graph> enumerate_trees(int n, Strategy s) {
  if (n < 1) throw ParameterError("tree order must be >= 1");
  if (s == Strategy::TreeEdge) return leaf_added_trees(n);
  KeyedGraphs keyed;
  for (const RootedTree& t : rooted_trees(n)) {
    insert_canonical(keyed, tree_graph(t));
  }
  return values_of(std::move(keyed));
}

std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > 8) {
    throw ParameterError("connected-graph enumeration needs 1 <= n <= 8");
  }
  std::vector<Graph> level{Graph(1, {})};
  for (int k = 1; k < n; ++k) {
    KeyedGraphs next;
    for (const Graph& g : level) {
      const std::vector<Edge> base = g.edges();
      for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<Edge> edges = base;
        for (int v = 0; v < k; ++v) {
          if (mask & (1u << v)) {
            edges.emplace_back(static_cast<Vertex>(v),
                               static_cast<Vertex>(k));
          }
        }
        insert_canonical(next, Graph(static_cast<std::size_t>(k + 1), edges));
      }
    }
    level = values_of(std::move(next));
  }
  return level;
}

std::vector<ClassMember> enumerate_unicyclic(int n, const ClassFilter& filter,
                                             const EnumerateOptions& options) {
  if (n < 3) throw ParameterError("unicyclic graphs need n >= 3");
  if (n > options.ceiling) {
    throw ParameterError("n = " + std::to_string(n) +
                         " exceeds the enumeration ceiling " +
                         std::to_string(options.ceiling) +
                         " (raise it with --ceiling)");
  }
  const Catalog all = catalog(n, options.strategy);
  std::vector<ClassMember> out;
  for (const ClassMember& member : *all) {
    if (filter.matches(member.report)) out.push_back(member);
  }
  return out;
}

ExtremalResult extremal_search(int n, const ClassFilter& filter,
                               Objective objective, Direction direction,
                               const EnumerateOptions& options) {
  ExtremalResult result;
  result.n = n;
  result.filter = filter;
  result.objective = objective;
  result.direction = direction;
  const std::vector<ClassMember> members =
      enumerate_unicyclic(n, filter, options);
  result.class_size = members.size();
  for (const ClassMember& member : members) {
    const std::int64_t value = objective_value(member.report, objective);
    const bool better =
        !result.optimum ||
        (direction == Direction::Min ? value < *result.optimum
                                     : value > *result.optimum);
    if (better) {
      result.optimum = value;
      result.witnesses.clear();
    }
    if (value == *result.optimum) {
      result.witnesses.push_back({member.key, to_graph6(member.graph)});
    }
  }
  return result;
}

}  // namespace unicyclic
