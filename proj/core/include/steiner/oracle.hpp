#pragma once

#include <vector>

#include "steiner/instance.hpp"

namespace steiner {

/// Exact optimum found by exhaustive search. `terminals` is filled for
/// k-tree queries (the terminal set of the winning tree), `cost` for the
/// min-cost query. Ties are broken by fewer edges, then by lexicographic
/// edge set, so results are stable across runs.
struct OracleResult {
  SubTree tree;
  int max_degree = 0;
  Rational cost{0};
  std::vector<int> terminals;
};

/// Exhaustive MD-GST: minimum max-degree subtree covering at least
/// `required_cover()` groups (and containing the root when set).
/// Guarded to n <= 16; throws "instance too large" beyond that and
/// "infeasible" when no subtree covers enough groups.
OracleResult brute_md_gst(const GstInstance& instance);

/// Exhaustive MD-kTree: minimum max-degree subtree containing >= k terminals.
OracleResult brute_md_ktree(const KTreeInstance& instance);

/// Exhaustive bounded-degree min-cost GST: cheapest subtree covering the
/// groups with deg(v) <= bounds[v] everywhere. Used as the integral side of
/// the LP relaxation check. Throws "infeasible" when no such tree exists.
OracleResult brute_min_cost_gst(const GstInstance& instance);

/// Star reduction from Hitting Set: root 0 joined to one leaf per element,
/// groups = the sets. The MD-GST optimum equals the minimum hitting set size.
/// Elements are relabeled 1..m in sorted order.
GstInstance gen_hitting_set_star(const std::vector<std::vector<int>>& sets);

}  // namespace steiner
