#pragma once

#include <vector>

#include "steiner/graph.hpp"

namespace steiner {

/// Recursion tree of 4/5-balanced separators. Internal nodes hold separator
/// sets of size <= w+1; leaves hold connected components of size <= w+1.
/// Member sets and leaf components partition the vertex set; a node's region
/// is the component it was carved out of (so regions nest along the tree).
struct SeparatorTree {
  struct Node {
    std::vector<int> members;
    std::vector<int> region;
    int parent = -1;
    std::vector<int> children;
    int level = 0;
    bool leaf = false;
  };
  std::vector<Node> nodes;  // index 0 is the root
  int width = 0;            // the w the tree was built with

  int depth() const;  // number of levels (root level counts as 1)
};

/// Smallest vertex set of size <= w+1 whose removal leaves every component
/// with at most ceil(4n/5) nodes; ties broken lexicographically, enumeration
/// by (size, lex). Exhaustive by design (desk scale, n <= 64). Throws
/// "no separator within width bound" when none exists.
std::vector<int> balanced_separator(const Graph& g, int w);

/// Algorithm: split off a balanced separator, recurse on components larger
/// than w+1, keep the rest as leaves.
SeparatorTree build_separator_tree(const Graph& g, int w);

/// Edges chosen to make every separator set and leaf component connected.
/// Leaves get a spanning tree of their own induced subgraph; separators get
/// hop-shortest paths from their smallest member to the rest, routed only
/// inside the separator's own region (never through ancestors).
struct SeparatorConnectors {
  std::vector<std::vector<std::pair<int, int>>> node_edges;  // per tree node
  std::vector<std::pair<int, int>> all;                      // deduplicated union
};

SeparatorConnectors connect_separators(const Graph& g, const SeparatorTree& tree);

}  // namespace steiner
