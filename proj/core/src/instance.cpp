#include "steiner/instance.hpp"

#include <algorithm>

namespace steiner {

int GstInstance::max_group_size() const {
  int best = 0;
  for (const auto& g : groups) best = std::max(best, static_cast<int>(g.size()));
  return best;
}

void GstInstance::canonicalize_groups() {
  for (auto& g : groups) {
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
  }
}

std::vector<std::string> validate(const GstInstance& instance) {
  std::vector<std::string> errors = validate_graph(instance.graph);
  const int n = instance.graph.node_count();
  if (instance.groups.empty()) errors.push_back("instance has no groups");
  for (int i = 0; i < instance.group_count(); ++i) {
    const auto& g = instance.groups[i];
    if (g.empty()) errors.push_back("empty group " + std::to_string(i));
    for (int v : g) {
      if (v < 0 || v >= n)
        errors.push_back("group " + std::to_string(i) + ": node out of range (" +
                         std::to_string(v) + ")");
    }
  }
  if (instance.root && (*instance.root < 0 || *instance.root >= n))
    errors.push_back("root out of range");
  if (!instance.bounds.empty()) {
    if (static_cast<int>(instance.bounds.size()) != n)
      errors.push_back("bounds array must have one entry per node");
    for (int b : instance.bounds) {
      if (b < 1) {
        errors.push_back("nonpositive degree bound");
        break;
      }
    }
  }
  if (instance.cover_threshold < 0 || instance.cover_threshold > instance.group_count())
    errors.push_back("cover threshold out of range");
  if (instance.max_group_size() > n) errors.push_back("group larger than node count");
  return errors;
}

std::vector<std::string> validate(const KTreeInstance& instance) {
  std::vector<std::string> errors = validate_graph(instance.graph);
  const int n = instance.graph.node_count();
  for (int v : instance.terminals) {
    if (v < 0 || v >= n) errors.push_back("terminal out of range (" + std::to_string(v) + ")");
  }
  std::vector<int> sorted = instance.terminals;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    errors.push_back("duplicate terminal");
  if (instance.k < 1) errors.push_back("k must be positive");
  if (instance.k > static_cast<int>(instance.terminals.size()))
    errors.push_back("k exceeds terminal count");
  return errors;
}

int covers(const SubTree& tree, const GstInstance& instance) {
  int count = 0;
  for (const auto& g : instance.groups) {
    for (int v : g) {
      if (tree.contains_node(v)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

SubTree prune_leaves(const Graph& g, const GstInstance& instance, SubTree tree, int keep_node) {
  const int n = g.node_count();
  std::vector<char> node_on(n, 0);
  std::vector<int> degree(n, 0);
  for (int v : tree.nodes) node_on[v] = 1;
  std::vector<char> edge_on(g.edge_count(), 0);
  for (const auto& [u, v] : tree.edges) {
    const int e = g.edge_index(u, v);
    edge_on[e] = 1;
    ++degree[u];
    ++degree[v];
  }

  std::vector<std::vector<int>> groups_of(n);
  std::vector<int> group_count(instance.group_count(), 0);
  std::vector<char> group_covered(instance.group_count(), 0);
  for (int gi = 0; gi < instance.group_count(); ++gi) {
    for (int v : instance.groups[gi]) {
      groups_of[v].push_back(gi);
      if (node_on[v]) ++group_count[gi];
    }
    group_covered[gi] = group_count[gi] > 0;
  }

  bool progress = true;
  while (progress) {
    progress = false;
    for (int v = 0; v < n; ++v) {
      if (!node_on[v] || v == keep_node || degree[v] != 1) continue;
      bool removable = true;
      for (int gi : groups_of[v]) {
        if (group_covered[gi] && group_count[gi] == 1) {
          removable = false;
          break;
        }
      }
      if (!removable) continue;
      node_on[v] = 0;
      for (int gi : groups_of[v]) --group_count[gi];
      for (const auto& [w, e] : g.neighbors(v)) {
        if (edge_on[e]) {
          edge_on[e] = 0;
          --degree[v];
          --degree[w];
        }
      }
      progress = true;
    }
  }

  std::vector<std::pair<int, int>> edges;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (edge_on[e]) edges.push_back({g.edge(e).u, g.edge(e).v});
  }
  if (!edges.empty()) return SubTree::from_edges(std::move(edges));
  for (int v = 0; v < n; ++v) {
    if (node_on[v]) return SubTree::single_node(v);
  }
  return SubTree::single_node(keep_node >= 0 ? keep_node : 0);
}

}  // namespace steiner
