#pragma once

#include <string>
#include <vector>

#include "steiner/instance.hpp"
#include "steiner/rng.hpp"
#include "steiner/separator.hpp"

namespace steiner {

/// The graph after contracting every separator set and leaf component into a
/// supernode. Every quotient edge joins a node to one of its separator-tree
/// ancestors or descendants; T' is a DFS tree of the quotient rooted at the
/// root separator, so every non-tree edge joins a node to a T'-ancestor.
struct ContractedInstance {
  Graph quotient;                                    // G'
  std::vector<int> supernode_of;                     // original node -> supernode
  std::vector<std::vector<int>> members;             // supernode -> original nodes
  std::vector<std::vector<std::pair<int, int>>> connector_edges;  // supernode -> E' part
  std::vector<std::pair<int, int>> rep_edge;         // quotient edge -> original endpoints
  int root_supernode = 0;
  std::vector<int> tprime_parent;                    // -1 at the root
  std::vector<int> tprime_parent_edge;               // quotient edge index, -1 at root
  std::vector<int> tprime_depth;
  std::vector<char> edge_in_tprime;                  // per quotient edge
  std::vector<std::vector<int>> supergroups;         // per original group
  int sep_tree_depth = 0;

  int tprime_height() const;
  bool is_tprime_ancestor(int ancestor, int node) const;
};

ContractedInstance contract(const Graph& g, const SeparatorTree& tree,
                            const SeparatorConnectors& connectors,
                            const std::vector<std::vector<int>>& groups);

/// Replaces every solution edge outside T' (always a backward edge, i.e. one
/// endpoint is a T'-ancestor of the other) by the T' path between its
/// endpoints. Coverage can only grow; the result is a subtree of T'. This is
/// the rewiring step the analysis applies to an optimum, run here on
/// concrete solutions to measure the degree inflation.
SubTree rewire_back_edges(const std::vector<int>& solution_edges,
                          const ContractedInstance& ci);

/// End-to-end pipeline for bounded-treewidth graphs: separator tree ->
/// connectors -> contraction -> min-degree GST on T' -> expansion back into
/// the original graph -> prune.
SubTree solve_md_gst_btw(const GstInstance& instance, int w, Rng& rng);

/// DOT renderings for inspection.
std::string separator_tree_dot(const SeparatorTree& tree);
std::string tprime_dot(const ContractedInstance& ci);

}  // namespace steiner
