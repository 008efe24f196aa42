#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steiner/graph.hpp"

namespace steiner {

/// Group Steiner instance: cover at least `cover_threshold` of the groups
/// with a subtree (containing `root` when set), subject to optional per-node
/// degree bounds. Groups are stored sorted and duplicate-free so instances
/// hash and serialize canonically.
struct GstInstance {
  Graph graph;
  std::vector<std::vector<int>> groups;
  std::optional<int> root;
  std::vector<int> bounds;  // empty = no degree bounds
  int cover_threshold = 0;  // 0 = cover all groups (normalized on access)

  int group_count() const { return static_cast<int>(groups.size()); }
  int required_cover() const { return cover_threshold > 0 ? cover_threshold : group_count(); }

  /// Size of the largest group.
  int max_group_size() const;

  void canonicalize_groups();
};

/// Steiner k-tree instance: find a subtree containing at least k of the
/// terminals. Terminal order matters (it is the hash order for the
/// derandomized reduction) and is preserved as given.
struct KTreeInstance {
  Graph graph;
  std::vector<int> terminals;
  int k = 1;
};

std::vector<std::string> validate(const GstInstance& instance);
std::vector<std::string> validate(const KTreeInstance& instance);

/// Number of groups intersected by the tree's node set.
int covers(const SubTree& tree, const GstInstance& instance);

/// Repeatedly removes leaves whose deletion keeps every group currently
/// covered by `tree` covered. `keep_node` (pass -1 for none) survives even
/// when redundant. Deterministic: scans nodes in ascending order.
SubTree prune_leaves(const Graph& g, const GstInstance& instance, SubTree tree, int keep_node);

}  // namespace steiner
