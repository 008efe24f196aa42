#include "steiner/separator.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace steiner {

namespace {

using Mask = std::uint64_t;

constexpr int kMaxSeparatorNodes = 64;  // masks carry the whole vertex set

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.node_count(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

int popcount(Mask m) { return std::popcount(m); }

// Every connected component of `mask` has at most `limit` nodes.
bool components_within(Mask mask, const std::vector<Mask>& adj, int limit) {
  while (mask != 0) {
    const int start = std::countr_zero(mask);
    Mask comp = Mask{1} << start;
    Mask frontier = comp;
    while (frontier != 0) {
      Mask next = 0;
      Mask f = frontier;
      while (f != 0) {
        const int v = std::countr_zero(f);
        f &= f - 1;
        next |= adj[v] & mask & ~comp;
      }
      comp |= next;
      frontier = next;
    }
    if (popcount(comp) > limit) return false;
    mask &= ~comp;
  }
  return true;
}

std::vector<Mask> split_components(Mask mask, const std::vector<Mask>& adj) {
  std::vector<Mask> out;
  while (mask != 0) {
    const int start = std::countr_zero(mask);
    Mask comp = Mask{1} << start;
    Mask frontier = comp;
    while (frontier != 0) {
      Mask next = 0;
      Mask f = frontier;
      while (f != 0) {
        const int v = std::countr_zero(f);
        f &= f - 1;
        next |= adj[v] & mask & ~comp;
      }
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    mask &= ~comp;
  }
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

// First separator of `region` in (size, lexicographic) order whose removal
// leaves components of at most ceil(4|region|/5) nodes.
Mask find_separator(Mask region, const std::vector<Mask>& adj, int w) {
  const int size = popcount(region);
  const int limit = (4 * size + 4) / 5;  // ceil(4n/5)
  const std::vector<int> nodes = mask_nodes(region);
  const int count = static_cast<int>(nodes.size());

  for (int s = 1; s <= w + 1 && s <= count; ++s) {
    std::vector<int> pick(s);
    for (int i = 0; i < s; ++i) pick[i] = i;
    while (true) {
      Mask sep = 0;
      for (int i : pick) sep |= Mask{1} << nodes[i];
      if (components_within(region & ~sep, adj, limit)) return sep;
      // next lexicographic combination
      int i = s - 1;
      while (i >= 0 && pick[i] == count - s + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::runtime_error("no separator within width bound");
}

}  // namespace

int SeparatorTree::depth() const {
  int max_level = 0;
  for (const auto& node : nodes) max_level = std::max(max_level, node.level);
  return max_level + 1;
}

std::vector<int> balanced_separator(const Graph& g, int w) {
  if (g.node_count() > kMaxSeparatorNodes)
    throw std::invalid_argument("graph too large for exhaustive separator search");
  const auto adj = adjacency_masks(g);
  Mask all = g.node_count() == 64 ? ~Mask{0} : (Mask{1} << g.node_count()) - 1;
  return mask_nodes(find_separator(all, adj, w));
}

SeparatorTree build_separator_tree(const Graph& g, int w) {
  const int n = g.node_count();
  if (n > kMaxSeparatorNodes)
    throw std::invalid_argument("graph too large for exhaustive separator search");
  if (!g.connected()) throw std::invalid_argument("graph not connected");
  const auto adj = adjacency_masks(g);

  SeparatorTree tree;
  tree.width = w;

  struct Job {
    Mask region;
    int parent;
    int level;
  };
  std::vector<Job> stack = {{n == 64 ? ~Mask{0} : (Mask{1} << n) - 1, -1, 0}};
  while (!stack.empty()) {
    const Job job = stack.back();
    stack.pop_back();

    SeparatorTree::Node node;
    node.region = mask_nodes(job.region);
    node.parent = job.parent;
    node.level = job.level;
    const int index = static_cast<int>(tree.nodes.size());
    if (job.parent >= 0) tree.nodes[job.parent].children.push_back(index);

    if (popcount(job.region) <= w + 1) {
      node.leaf = true;
      node.members = node.region;
      tree.nodes.push_back(std::move(node));
      continue;
    }
    const Mask sep = find_separator(job.region, adj, w);
    node.members = mask_nodes(sep);
    tree.nodes.push_back(std::move(node));

    auto components = split_components(job.region & ~sep, adj);
    // push in reverse so components are processed in ascending order
    std::reverse(components.begin(), components.end());
    for (Mask comp : components) stack.push_back({comp, index, job.level + 1});
  }
  return tree;
}

SeparatorConnectors connect_separators(const Graph& g, const SeparatorTree& tree) {
  SeparatorConnectors out;
  out.node_edges.resize(tree.nodes.size());
  std::set<std::pair<int, int>> all;

  for (size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& node = tree.nodes[i];
    std::set<std::pair<int, int>> local;
    std::vector<char> inside(g.node_count(), 0);

    if (node.leaf) {
      // arbitrary spanning tree of the leaf component, BFS from the smallest
      for (int v : node.members) inside[v] = 1;
      std::vector<int> parent(g.node_count(), -1);
      std::vector<char> seen(g.node_count(), 0);
      std::vector<int> queue = {node.members.front()};
      seen[queue[0]] = 1;
      for (size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (const auto& [w2, e] : g.neighbors(v)) {
          if (!inside[w2] || seen[w2]) continue;
          seen[w2] = 1;
          parent[w2] = v;
          queue.push_back(w2);
        }
      }
      for (int v : node.members) {
        if (!seen[v]) throw std::logic_error("separator node unreachable within region");
        if (parent[v] >= 0) local.insert(ordered_pair(v, parent[v]));
      }
    } else if (node.members.size() > 1) {
      // hop-shortest paths from the first member to the rest, inside the region
      for (int v : node.region) inside[v] = 1;
      const int u = node.members.front();
      std::vector<int> parent(g.node_count(), -1);
      std::vector<char> seen(g.node_count(), 0);
      std::vector<int> queue = {u};
      seen[u] = 1;
      for (size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (const auto& [w2, e] : g.neighbors(v)) {
          if (!inside[w2] || seen[w2]) continue;
          seen[w2] = 1;
          parent[w2] = v;
          queue.push_back(w2);
        }
      }
      for (int v : node.members) {
        if (v == u) continue;
        if (!seen[v]) throw std::logic_error("separator node unreachable within region");
        for (int cur = v; parent[cur] >= 0; cur = parent[cur]) {
          local.insert(ordered_pair(cur, parent[cur]));
          if (parent[cur] == u) break;
        }
      }
    }

    out.node_edges[i].assign(local.begin(), local.end());
    all.insert(local.begin(), local.end());
  }
  out.all.assign(all.begin(), all.end());
  return out;
}

}  // namespace steiner
