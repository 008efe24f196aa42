#include "steiner/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace steiner {

Graph::Graph(int node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  adjacency_.assign(node_count_ > 0 ? node_count_ : 0, {});
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    const Edge& e = edges_[i];
    if (e.u >= 0 && e.u < node_count_ && e.v >= 0 && e.v < node_count_ && e.u != e.v) {
      adjacency_[e.u].push_back({e.v, i});
      adjacency_[e.v].push_back({e.u, i});
    }
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

int Graph::edge_index(int u, int v) const {
  if (u < 0 || u >= node_count_) return -1;
  for (const auto& [w, e] : adjacency_[u]) {
    if (w == v) return e;
  }
  return -1;
}

bool Graph::connected() const {
  if (node_count_ <= 1) return true;
  std::vector<char> seen(node_count_, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& [w, e] : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == node_count_;
}

std::vector<std::string> validate_graph(const Graph& g) {
  std::vector<std::string> errors;
  if (g.node_count() <= 0) errors.push_back("node count must be positive");
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g.edges()) {
    if (e.u < 0 || e.u >= g.node_count() || e.v < 0 || e.v >= g.node_count()) {
      errors.push_back("edge endpoint out of range: (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ")");
      continue;
    }
    if (e.u == e.v) errors.push_back("self-loop at node " + std::to_string(e.u));
    if (!seen.insert({e.u, e.v}).second)
      errors.push_back("parallel edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    if (e.cost < Rational(0)) errors.push_back("negative edge cost");
  }
  return errors;
}

SubTree SubTree::single_node(int v) {
  SubTree t;
  t.nodes = {v};
  return t;
}

SubTree SubTree::from_edges(std::vector<std::pair<int, int>> edges) {
  SubTree t;
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  t.edges = std::move(edges);
  std::set<int> nodes;
  for (const auto& [u, v] : t.edges) {
    nodes.insert(u);
    nodes.insert(v);
  }
  t.nodes.assign(nodes.begin(), nodes.end());
  return t;
}

bool SubTree::contains_node(int v) const {
  return std::binary_search(nodes.begin(), nodes.end(), v);
}

int max_degree(const SubTree& tree) {
  if (tree.edges.empty()) return 0;
  std::map<int, int> deg;
  for (const auto& [u, v] : tree.edges) {
    ++deg[u];
    ++deg[v];
  }
  int best = 0;
  for (const auto& [node, d] : deg) best = std::max(best, d);
  return best;
}

int degree_in(const SubTree& tree, int v) {
  int d = 0;
  for (const auto& [a, b] : tree.edges) {
    if (a == v || b == v) ++d;
  }
  return d;
}

bool is_subtree_of(const SubTree& tree, const Graph& g) {
  if (tree.nodes.empty()) return false;
  if (tree.edges.size() + 1 != tree.nodes.size()) return false;
  for (const auto& [u, v] : tree.edges) {
    if (g.edge_index(u, v) < 0) return false;
  }
  if (tree.nodes.size() == 1) {
    return tree.nodes[0] >= 0 && tree.nodes[0] < g.node_count();
  }
  // connectivity over the tree's own edges
  std::vector<int> stack = {tree.nodes[0]};
  std::set<int> seen = {tree.nodes[0]};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (const auto& [u, v] : tree.edges) {
      int other = -1;
      if (u == x) other = v;
      if (v == x) other = u;
      if (other >= 0 && !seen.count(other)) {
        seen.insert(other);
        stack.push_back(other);
      }
    }
  }
  return seen.size() == tree.nodes.size();
}

Rational tree_cost(const SubTree& tree, const Graph& g) {
  Rational total{0};
  for (const auto& [u, v] : tree.edges) {
    const int e = g.edge_index(u, v);
    if (e >= 0) total += g.edge(e).cost;
  }
  return total;
}

}  // namespace steiner
