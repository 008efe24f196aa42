#include "steiner/lp_gst.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace steiner {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kFlowHuge = 1e30;  // reported flow for groups containing the root
}  // namespace

RootedTree::RootedTree(const Graph& g, int root_node) : root(root_node) {
  const int n = g.node_count();
  if (root < 0 || root >= n) throw std::invalid_argument("root missing");
  if (g.edge_count() != n - 1 || !g.connected())
    throw std::invalid_argument("graph is not a tree");

  parent_node.assign(n, -1);
  parent_edge.assign(n, -1);
  depth.assign(n, 0);
  child_edges.assign(n, {});
  bfs_nodes.reserve(n);
  bfs_edges.reserve(n - 1);

  std::vector<char> seen(n, 0);
  std::vector<int> queue = {root};
  seen[root] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    bfs_nodes.push_back(v);
    for (const auto& [w, e] : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = 1;
      parent_node[w] = v;
      parent_edge[w] = e;
      depth[w] = depth[v] + 1;
      child_edges[v].push_back(e);
      bfs_edges.push_back(e);
      queue.push_back(w);
    }
  }
}

int RootedTree::parent_edge_of(const Graph& g, int e) const {
  const int child = lower_endpoint(g, e);
  const int upper = parent_node[child];
  return upper == root ? -1 : parent_edge[upper];
}

int RootedTree::lower_endpoint(const Graph& g, int e) const {
  const Edge& ed = g.edge(e);
  return depth[ed.u] > depth[ed.v] ? ed.u : ed.v;
}

GstLpModel build_lp(const GstInstance& instance, bool with_degree_rows) {
  if (!instance.root) throw std::invalid_argument("root missing");
  const Graph& g = instance.graph;
  const RootedTree tree(g, *instance.root);
  const int n = g.node_count();
  const int m = g.edge_count();

  GstLpModel model;
  model.edge_count = m;
  model.degree_rows = with_degree_rows;
  LinearProgram& lp = model.lp;

  model.x_var.resize(m);
  for (int e = 0; e < m; ++e) {
    const Edge& ed = g.edge(e);
    model.x_var[e] = lp.add_variable(
        "x_" + std::to_string(ed.u) + "_" + std::to_string(ed.v), 0.0, 1.0,
        ed.cost.to_double());
  }

  for (int gi = 0; gi < instance.group_count(); ++gi) {
    const auto& group = instance.groups[gi];
    const bool root_in_group =
        std::binary_search(group.begin(), group.end(), tree.root);
    if (root_in_group) continue;  // no cut separates the root from this group

    // flow variables only on edges that can carry r->group flow
    std::vector<char> relevant(m, 0);
    std::vector<char> in_group(n, 0);
    for (int v : group) in_group[v] = 1;
    for (int v : group) {
      int cur = v;
      while (cur != tree.root && !relevant[tree.parent_edge[cur]]) {
        relevant[tree.parent_edge[cur]] = 1;
        cur = tree.parent_node[cur];
      }
    }

    std::vector<int> flow_var(m, -1);
    const std::string tag = "g" + std::to_string(gi);
    for (int e : tree.bfs_edges) {
      if (relevant[e]) {
        flow_var[e] = lp.add_variable("f_" + tag + "_e" + std::to_string(e), 0.0, kInf, 0.0);
      }
    }
    // capacity f <= x
    for (int e = 0; e < m; ++e) {
      if (flow_var[e] < 0) continue;
      LinearProgram::Row row;
      row.coeffs = {{flow_var[e], 1.0}, {model.x_var[e], -1.0}};
      row.sense = RowSense::LessEq;
      row.rhs = 0.0;
      row.name = "cap_" + tag + "_e" + std::to_string(e);
      lp.add_row(std::move(row));
    }
    // conservation at each node of the relevant subtree: inflow equals
    // outflow plus delivery (members absorb, others forward)
    for (int v : tree.bfs_nodes) {
      if (v == tree.root) continue;
      const int pe = tree.parent_edge[v];
      if (flow_var[pe] < 0) continue;
      LinearProgram::Row row;
      row.coeffs.push_back({flow_var[pe], 1.0});
      for (int ce : tree.child_edges[v]) {
        if (flow_var[ce] >= 0) row.coeffs.push_back({flow_var[ce], -1.0});
      }
      row.name = "cons_" + tag + "_v" + std::to_string(v);
      row.rhs = 0.0;
      if (in_group[v]) {
        row.sense = RowSense::GreaterEq;  // delivery d_v >= 0 eliminated
      } else {
        row.sense = RowSense::Equal;
      }
      lp.add_row(std::move(row));
    }
    // one unit leaves the root
    LinearProgram::Row demand;
    for (int ce : tree.child_edges[tree.root]) {
      if (flow_var[ce] >= 0) demand.coeffs.push_back({flow_var[ce], 1.0});
    }
    demand.sense = RowSense::GreaterEq;
    demand.rhs = 1.0;
    demand.name = "demand_" + tag;
    lp.add_row(std::move(demand));
  }

  if (with_degree_rows) {
    if (instance.bounds.empty())
      throw std::invalid_argument("degree rows requested but instance has no bounds");
    for (int v = 0; v < n; ++v) {
      const double b = instance.bounds[v];
      LinearProgram::Row row;
      if (v == tree.root) {
        // x(delta(r)) <= b_r, the dummy parent edge value is the constant 1
        for (const auto& [w, e] : g.neighbors(v)) row.coeffs.push_back({model.x_var[e], 1.0});
        row.rhs = b;
      } else {
        const int pe = tree.parent_edge[v];
        for (const auto& [w, e] : g.neighbors(v)) {
          double coeff = 1.0;
          if (e == pe) coeff = 1.0 - b;
          row.coeffs.push_back({model.x_var[e], coeff});
        }
        row.rhs = 0.0;
      }
      row.sense = RowSense::LessEq;
      row.name = "deg_v" + std::to_string(v);
      lp.add_row(std::move(row));
    }
  }
  return model;
}

FractionalSolution solve_lp(const GstLpModel& model, const GstInstance& instance) {
  const LpSolution sol = solve_simplex(model.lp);
  if (sol.status == LpStatus::Infeasible) throw std::runtime_error("infeasible");
  if (sol.status != LpStatus::Optimal)
    throw std::runtime_error("LP solve failed (iteration limit or unbounded)");

  const RootedTree tree(instance.graph, *instance.root);
  FractionalSolution out;
  out.edge_value.resize(model.edge_count);
  out.parent_edge.resize(model.edge_count);
  for (int e = 0; e < model.edge_count; ++e) {
    double v = sol.x[model.x_var[e]];
    out.edge_value[e] = std::clamp(v, 0.0, 1.0);
    const int child = tree.lower_endpoint(instance.graph, e);
    const int pn = tree.parent_node[child];
    out.parent_edge[e] = pn == tree.root ? -1 : tree.parent_edge[pn];
  }
  out.objective = sol.objective;
  out.duality_gap = sol.duality_gap;
  return out;
}

FractionalSolution monotonize(const FractionalSolution& sol, const GstInstance& instance) {
  const RootedTree tree(instance.graph, *instance.root);
  FractionalSolution out = sol;
  for (int e : tree.bfs_edges) {  // parents precede children
    const int pe = out.parent_edge[e];
    const double parent_value = pe < 0 ? out.root_edge_value : out.edge_value[pe];
    out.edge_value[e] = std::min(out.edge_value[e], parent_value);
  }
  const FractionalReport before = verify_fractional(sol, instance);
  const FractionalReport after = verify_fractional(out, instance);
  if (before.min_group_flow >= 1.0 - 1e-6 && after.min_group_flow < 1.0 - 1e-6)
    throw std::runtime_error("monotonization broke feasibility");
  return out;
}

double group_flow(const RootedTree& tree, const Graph& g, const std::vector<double>& x,
                  const std::vector<int>& group) {
  if (std::binary_search(group.begin(), group.end(), tree.root)) return kFlowHuge;
  std::vector<char> in_group(g.node_count(), 0);
  for (int v : group) in_group[v] = 1;
  // usable flow below each node, leaves first
  std::vector<double> through(g.node_count(), 0.0);
  for (auto it = tree.bfs_nodes.rbegin(); it != tree.bfs_nodes.rend(); ++it) {
    const int v = *it;
    if (in_group[v]) {
      through[v] = kFlowHuge;
      continue;
    }
    double sum = 0.0;
    for (int ce : tree.child_edges[v]) {
      const int c = tree.lower_endpoint(g, ce);
      sum += std::min(x[ce], through[c]);
    }
    through[v] = sum;
  }
  return std::min(through[tree.root], kFlowHuge);
}

FractionalReport verify_fractional(const FractionalSolution& sol,
                                   const GstInstance& instance) {
  const Graph& g = instance.graph;
  const RootedTree tree(g, *instance.root);
  FractionalReport report;
  report.min_group_flow = kFlowHuge;
  for (const auto& group : instance.groups) {
    const double f = group_flow(tree, g, sol.edge_value, group);
    report.group_flows.push_back(f);
    report.min_group_flow = std::min(report.min_group_flow, f);
  }
  if (!instance.bounds.empty()) {
    for (int v = 0; v < g.node_count(); ++v) {
      double incident = 0.0;
      for (const auto& [w, e] : g.neighbors(v)) incident += sol.edge_value[e];
      const double parent_value =
          v == tree.root ? sol.root_edge_value : sol.edge_value[tree.parent_edge[v]];
      const double viol = incident - instance.bounds[v] * parent_value;
      report.max_degree_violation = std::max(report.max_degree_violation, viol);
    }
  }
  return report;
}

std::string dump_lp(const GstLpModel& model) { return to_lp_format(model.lp); }

}  // namespace steiner
