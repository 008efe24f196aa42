#include "steiner/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>

namespace steiner {
namespace {

constexpr int kMaxOracleNodes = 16;

using Mask = std::uint32_t;

int popcount(Mask m) { return std::popcount(m); }

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.node_count(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

bool subset_connected(Mask mask, const std::vector<Mask>& adj) {
  if (mask == 0) return false;
  const int start = std::countr_zero(mask);
  Mask reached = Mask{1} << start;
  Mask frontier = reached;
  while (frontier != 0) {
    Mask next = 0;
    Mask f = frontier;
    while (f != 0) {
      const int v = std::countr_zero(f);
      f &= f - 1;
      next |= adj[v] & mask & ~reached;
    }
    reached |= next;
    frontier = next;
  }
  return reached == mask;
}

// Backtracking search for the lexicographically smallest spanning tree of
// the masked subgraph with max degree <= cap. Include-first DFS over the
// lex-sorted candidate edges yields the lex-min edge set.
struct SpanningTreeSearch {
  const std::vector<std::pair<int, int>>& cand;
  int needed;
  int cap;
  const std::vector<int>* degree_bound = nullptr;  // optional per-node caps
  std::vector<int> parent;                         // DSU over node ids
  std::vector<int> degree;
  std::vector<std::pair<int, int>> chosen;
  bool found = false;

  SpanningTreeSearch(const std::vector<std::pair<int, int>>& cand_edges, int node_count,
                     int needed_edges, int deg_cap)
      : cand(cand_edges), needed(needed_edges), cap(deg_cap), parent(node_count),
        degree(node_count, 0) {
    for (int i = 0; i < node_count; ++i) parent[i] = i;
  }

  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }

  int cap_at(int v) const {
    const int b = degree_bound ? std::min(cap, (*degree_bound)[v]) : cap;
    return b;
  }

  bool run(size_t idx) {
    if (static_cast<int>(chosen.size()) == needed) {
      found = true;
      return true;
    }
    if (cand.size() - idx < static_cast<size_t>(needed) - chosen.size()) return false;
    const auto [u, v] = cand[idx];
    const int ru = find(u);
    const int rv = find(v);
    if (ru != rv && degree[u] < cap_at(u) && degree[v] < cap_at(v)) {
      // include
      const std::vector<int> saved_parent = parent;
      parent[ru] = rv;
      ++degree[u];
      ++degree[v];
      chosen.push_back({u, v});
      if (run(idx + 1)) return true;
      chosen.pop_back();
      --degree[u];
      --degree[v];
      parent = saved_parent;
    }
    return run(idx + 1);  // exclude
  }
};

std::optional<std::vector<std::pair<int, int>>> lex_min_spanning_tree(
    const std::vector<std::pair<int, int>>& cand, int node_count, int needed, int cap,
    const std::vector<int>* degree_bound = nullptr) {
  if (cap < 1 && needed > 0) return std::nullopt;
  SpanningTreeSearch search(cand, node_count, needed, cap);
  search.degree_bound = degree_bound;
  if (search.run(0)) return search.chosen;
  return std::nullopt;
}

std::vector<std::pair<int, int>> induced_edges(const Graph& g, Mask mask) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) {
    if ((mask >> e.u & 1) && (mask >> e.v & 1)) out.push_back({e.u, e.v});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> mask_nodes(Mask mask) {
  std::vector<int> nodes;
  while (mask != 0) {
    nodes.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return nodes;
}

// Subsets ordered by (popcount, value): ties on degree are then resolved by
// fewer edges first, and within equal size by explicit lex comparison.
std::vector<Mask> subsets_by_size(int n) {
  std::vector<Mask> masks;
  masks.reserve((size_t{1} << n) - 1);
  for (Mask m = 1; m < (Mask{1} << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](Mask a, Mask b) { return popcount(a) < popcount(b); });
  return masks;
}

struct MdSearchConfig {
  const Graph& graph;
  Mask required;                       // nodes every tree must contain (root)
  std::function<bool(Mask)> feasible;  // coverage test on the node set
};

OracleResult min_degree_search(const MdSearchConfig& cfg) {
  const Graph& g = cfg.graph;
  const int n = g.node_count();
  if (n > kMaxOracleNodes) throw std::invalid_argument("instance too large");
  const auto adj = adjacency_masks(g);

  std::optional<OracleResult> best;
  for (Mask mask : subsets_by_size(n)) {
    if ((mask & cfg.required) != cfg.required) continue;
    const int size = popcount(mask);
    if (best && best->max_degree == 0) break;  // degree 0 cannot be tied or beaten
    if (!cfg.feasible(mask)) continue;
    if (!subset_connected(mask, adj)) continue;

    if (size == 1) {
      OracleResult r;
      r.tree = SubTree::single_node(mask_nodes(mask)[0]);
      r.max_degree = 0;
      best = r;  // first hit is the lex-smallest single node
      continue;
    }

    const int needed = size - 1;
    const auto cand = induced_edges(g, mask);
    const int cap_limit = best ? best->max_degree : needed;
    // exact minimum degree <= cap_limit, scanning upward; trees are sparse
    // at desk scale so this stays cheap
    std::optional<std::vector<std::pair<int, int>>> tree;
    int deg_found = -1;
    for (int d = 1; d <= cap_limit; ++d) {
      tree = lex_min_spanning_tree(cand, n, needed, d);
      if (tree) {
        deg_found = d;
        break;
      }
    }
    if (!tree) continue;

    SubTree st = SubTree::from_edges(*tree);
    const int real_deg = max_degree(st);
    bool take = false;
    if (!best || real_deg < best->max_degree) {
      take = true;
    } else if (real_deg == best->max_degree) {
      if (st.edge_count() < best->tree.edge_count() ||
          (st.edge_count() == best->tree.edge_count() && st.edges < best->tree.edges)) {
        take = true;
      }
    }
    if (take) {
      OracleResult r;
      r.tree = std::move(st);
      r.max_degree = real_deg;
      best = std::move(r);
    }
  }
  if (!best) throw std::runtime_error("infeasible");
  return *best;
}

}  // namespace

OracleResult brute_md_gst(const GstInstance& instance) {
  const auto errors = validate(instance);
  if (!errors.empty()) throw std::invalid_argument("invalid instance: " + errors.front());
  const int n = instance.graph.node_count();
  if (n > kMaxOracleNodes) throw std::invalid_argument("instance too large");

  std::vector<std::uint64_t> group_bit(n, 0);
  if (instance.group_count() > 64) throw std::invalid_argument("too many groups for oracle");
  for (int i = 0; i < instance.group_count(); ++i) {
    for (int v : instance.groups[i]) group_bit[v] |= std::uint64_t{1} << i;
  }
  const int q = instance.required_cover();

  MdSearchConfig cfg{instance.graph,
                     instance.root ? (Mask{1} << *instance.root) : 0,
                     [&](Mask mask) {
                       std::uint64_t covered = 0;
                       Mask m = mask;
                       while (m != 0) {
                         covered |= group_bit[std::countr_zero(m)];
                         m &= m - 1;
                       }
                       return std::popcount(covered) >= q;
                     }};
  return min_degree_search(cfg);
}

OracleResult brute_md_ktree(const KTreeInstance& instance) {
  const auto errors = validate(instance);
  if (!errors.empty()) throw std::invalid_argument("invalid instance: " + errors.front());
  const int n = instance.graph.node_count();
  if (n > kMaxOracleNodes) throw std::invalid_argument("instance too large");

  Mask terminal_mask = 0;
  for (int t : instance.terminals) terminal_mask |= Mask{1} << t;

  MdSearchConfig cfg{instance.graph, 0,
                     [&](Mask mask) { return popcount(mask & terminal_mask) >= instance.k; }};
  OracleResult r = min_degree_search(cfg);
  for (int v : r.tree.nodes) {
    if (terminal_mask >> v & 1) r.terminals.push_back(v);
  }
  return r;
}

OracleResult brute_min_cost_gst(const GstInstance& instance) {
  const auto errors = validate(instance);
  if (!errors.empty()) throw std::invalid_argument("invalid instance: " + errors.front());
  const Graph& g = instance.graph;
  const int n = g.node_count();
  if (n > kMaxOracleNodes) throw std::invalid_argument("instance too large");
  if (instance.group_count() > 64) throw std::invalid_argument("too many groups for oracle");

  std::vector<std::uint64_t> group_bit(n, 0);
  for (int i = 0; i < instance.group_count(); ++i) {
    for (int v : instance.groups[i]) group_bit[v] |= std::uint64_t{1} << i;
  }
  const int q = instance.required_cover();
  const auto adj = adjacency_masks(g);
  const Mask required = instance.root ? (Mask{1} << *instance.root) : 0;

  std::optional<OracleResult> best;
  for (Mask mask : subsets_by_size(n)) {
    if ((mask & required) != required) continue;
    std::uint64_t covered = 0;
    Mask m = mask;
    while (m != 0) {
      covered |= group_bit[std::countr_zero(m)];
      m &= m - 1;
    }
    if (std::popcount(covered) < q) continue;
    if (!subset_connected(mask, adj)) continue;

    const int size = popcount(mask);
    if (size == 1) {
      if (!best || Rational(0) < best->cost) {
        OracleResult r;
        r.tree = SubTree::single_node(mask_nodes(mask)[0]);
        r.cost = Rational(0);
        best = r;
      }
      continue;
    }

    // min-cost degree-respecting spanning tree of the induced subgraph
    const auto cand = induced_edges(g, mask);
    const int needed = size - 1;
    struct CostSearch {
      const Graph& g;
      const std::vector<std::pair<int, int>>& cand;
      const std::vector<int>& bounds;
      int needed;
      std::vector<int> parent;
      std::vector<int> degree;
      std::vector<std::pair<int, int>> chosen;
      Rational cost{0};
      std::optional<std::pair<Rational, std::vector<std::pair<int, int>>>> best;

      int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }

      void run(size_t idx) {
        if (static_cast<int>(chosen.size()) == needed) {
          if (!best || cost < best->first) best = {cost, chosen};
          return;
        }
        if (cand.size() - idx < static_cast<size_t>(needed) - chosen.size()) return;
        if (best && best->first < cost) return;  // costs are nonnegative
        const auto [u, v] = cand[idx];
        const int ru = find(u);
        const int rv = find(v);
        const int bu = bounds.empty() ? needed : bounds[u];
        const int bv = bounds.empty() ? needed : bounds[v];
        if (ru != rv && degree[u] < bu && degree[v] < bv) {
          const std::vector<int> saved = parent;
          parent[ru] = rv;
          ++degree[u];
          ++degree[v];
          chosen.push_back({u, v});
          const Rational saved_cost = cost;
          cost += g.edge(g.edge_index(u, v)).cost;
          run(idx + 1);
          cost = saved_cost;
          chosen.pop_back();
          --degree[u];
          --degree[v];
          parent = saved;
        }
        run(idx + 1);
      }
    };
    CostSearch search{g, cand, instance.bounds, needed,
                      std::vector<int>(n), std::vector<int>(n, 0)};
    for (int i = 0; i < n; ++i) search.parent[i] = i;
    search.run(0);
    if (!search.best) continue;

    SubTree st = SubTree::from_edges(search.best->second);
    const Rational c = search.best->first;
    bool take = false;
    if (!best || c < best->cost) {
      take = true;
    } else if (c == best->cost) {
      if (st.edge_count() < best->tree.edge_count() ||
          (st.edge_count() == best->tree.edge_count() && st.edges < best->tree.edges)) {
        take = true;
      }
    }
    if (take) {
      OracleResult r;
      r.tree = std::move(st);
      r.max_degree = max_degree(r.tree);
      r.cost = c;
      best = std::move(r);
    }
  }
  if (!best) throw std::runtime_error("infeasible");
  return *best;
}

GstInstance gen_hitting_set_star(const std::vector<std::vector<int>>& sets) {
  if (sets.empty()) throw std::invalid_argument("no sets given");
  std::set<int> universe;
  for (const auto& s : sets) {
    if (s.empty()) throw std::invalid_argument("empty set present");
    universe.insert(s.begin(), s.end());
  }
  std::vector<int> elements(universe.begin(), universe.end());
  auto node_of = [&](int element) {
    const auto it = std::lower_bound(elements.begin(), elements.end(), element);
    return 1 + static_cast<int>(it - elements.begin());
  };

  const int n = 1 + static_cast<int>(elements.size());
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({0, i, Rational(1)});

  GstInstance inst;
  inst.graph = Graph(n, std::move(edges));
  inst.root = 0;
  for (const auto& s : sets) {
    std::vector<int> group;
    for (int e : s) group.push_back(node_of(e));
    inst.groups.push_back(std::move(group));
  }
  inst.canonicalize_groups();
  return inst;
}

}  // namespace steiner
