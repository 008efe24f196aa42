#pragma once

#include <string>
#include <utility>
#include <vector>

#include "steiner/rational.hpp"

namespace steiner {

struct Edge {
  int u = 0;
  int v = 0;
  Rational cost{1};
};

inline std::pair<int, int> ordered_pair(int a, int b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

/// Undirected graph on dense node ids [0, n). Immutable after construction;
/// edge endpoints are normalized to u < v and the adjacency is prebuilt with
/// sorted neighbor lists so traversals are deterministic.
class Graph {
 public:
  Graph() = default;
  Graph(int node_count, std::vector<Edge> edges);

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }

  /// (neighbor, edge index) pairs sorted by neighbor id.
  const std::vector<std::pair<int, int>>& neighbors(int v) const { return adjacency_[v]; }

  /// Index of edge {u, v} or -1.
  int edge_index(int u, int v) const;

  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  bool connected() const;

 private:
  int node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

/// Structural problems that make a Graph unusable (ids out of range,
/// self-loops, parallel edges, negative costs). Empty result means sound.
std::vector<std::string> validate_graph(const Graph& g);

/// A subtree given by its edge set; a single node with no edges is a valid
/// (and sometimes optimal) tree. Node list is derived and kept sorted.
struct SubTree {
  std::vector<std::pair<int, int>> edges;  // normalized u < v, sorted
  std::vector<int> nodes;                  // sorted, nonempty for a valid tree

  static SubTree single_node(int v);
  static SubTree from_edges(std::vector<std::pair<int, int>> edges);

  bool contains_node(int v) const;
  int edge_count() const { return static_cast<int>(edges.size()); }
};

/// Max over nodes of the tree degree; 0 for a single node.
int max_degree(const SubTree& tree);

int degree_in(const SubTree& tree, int v);

/// Edges exist in g, |edges| = |nodes| - 1, and the edge set is connected.
bool is_subtree_of(const SubTree& tree, const Graph& g);

Rational tree_cost(const SubTree& tree, const Graph& g);

}  // namespace steiner
