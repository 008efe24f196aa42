#pragma once

#include <string>
#include <vector>

#include "steiner/instance.hpp"
#include "steiner/simplex.hpp"

namespace steiner {

/// Tree instance rooted at r: parent pointers, BFS order, and the edge
/// indexing the LP and the rounding engine share. Throws "graph is not a
/// tree" / "root missing" when the input does not qualify.
struct RootedTree {
  int root = 0;
  std::vector<int> parent_node;    // per node, -1 at root
  std::vector<int> parent_edge;    // per node, edge to parent, -1 at root
  std::vector<int> depth;          // per node
  std::vector<int> bfs_nodes;      // root first
  std::vector<int> bfs_edges;      // edges in nondecreasing depth order
  std::vector<std::vector<int>> child_edges;  // per node

  RootedTree(const Graph& g, int root);

  int edge_count() const { return static_cast<int>(bfs_edges.size()); }
  /// Parent edge of an edge (the next edge toward the root), -1 for depth-1
  /// edges whose parent is the dummy root edge.
  int parent_edge_of(const Graph& g, int e) const;
  /// The endpoint of e farther from the root.
  int lower_endpoint(const Graph& g, int e) const;
};

/// Fractional LP solution over tree edges. `parent_edge[e]` is -1 where the
/// parent is the dummy root edge f with value fixed to 1.
struct FractionalSolution {
  std::vector<double> edge_value;
  std::vector<int> parent_edge;
  double root_edge_value = 1.0;
  double objective = 0.0;
  double duality_gap = 0.0;
};

/// Flow-compacted group Steiner LP on a rooted tree. For each group, one
/// unit of flow travels from the root toward the group members under edge
/// capacities x; satisfying all of them is equivalent to the exponential
/// family of cut constraints by max-flow/min-cut. Degree rows (optional)
/// read x(delta(v)) <= b(v) * x_{e_v}, with the root's parent value fixed
/// at 1. Flow variables are only created on edges that lie on a root-to-
/// member path; every other edge provably carries no flow.
struct GstLpModel {
  LinearProgram lp;
  std::vector<int> x_var;  // per tree edge
  int edge_count = 0;
  bool degree_rows = false;
};

GstLpModel build_lp(const GstInstance& instance, bool with_degree_rows);

/// Solves the model; throws std::runtime_error("infeasible") when the degree
/// rows admit no fractional solution. Deterministic for a fixed model.
FractionalSolution solve_lp(const GstLpModel& model, const GstInstance& instance);

/// Clamps each edge value to its parent's (root-to-leaf order) so the
/// rounding ratios x_e / x_{p(e)} are at most 1. Any feasible flow is also
/// feasible after clamping (flows only decrease along root paths), but the
/// result is re-verified and a failure throws rather than being repaired.
FractionalSolution monotonize(const FractionalSolution& sol, const GstInstance& instance);

struct FractionalReport {
  double min_group_flow = 0.0;      // min over groups of max r->group flow
  double max_degree_violation = 0.0;  // max over degree rows of lhs - rhs
  std::vector<double> group_flows;  // per group; huge value if root covers it
};

FractionalReport verify_fractional(const FractionalSolution& sol, const GstInstance& instance);

/// Exact max-flow (= min-cut) from the root to a group on the tree under
/// capacities x, by one bottom-up pass.
double group_flow(const RootedTree& tree, const Graph& g, const std::vector<double>& x,
                  const std::vector<int>& group);

/// Text dump of the model in LP interchange format.
std::string dump_lp(const GstLpModel& model);

}  // namespace steiner
