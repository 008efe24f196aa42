#include "steiner/contraction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "steiner/rounding.hpp"

namespace steiner {

int ContractedInstance::tprime_height() const {
  int h = 0;
  for (int d : tprime_depth) h = std::max(h, d);
  return h;
}

bool ContractedInstance::is_tprime_ancestor(int ancestor, int node) const {
  int cur = node;
  while (cur >= 0) {
    if (cur == ancestor) return true;
    cur = tprime_parent[cur];
  }
  return false;
}

ContractedInstance contract(const Graph& g, const SeparatorTree& tree,
                            const SeparatorConnectors& connectors,
                            const std::vector<std::vector<int>>& groups) {
  const int n = g.node_count();
  const int sn = static_cast<int>(tree.nodes.size());

  ContractedInstance ci;
  ci.sep_tree_depth = tree.depth();
  ci.supernode_of.assign(n, -1);
  ci.members.resize(sn);
  ci.connector_edges = connectors.node_edges;
  for (int s = 0; s < sn; ++s) {
    ci.members[s] = tree.nodes[s].members;
    for (int v : tree.nodes[s].members) {
      if (ci.supernode_of[v] != -1) throw std::logic_error("member sets do not partition V");
      ci.supernode_of[v] = s;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (ci.supernode_of[v] == -1) throw std::logic_error("member sets do not partition V");
  }

  // quotient without self-loops or parallel edges; remember a representative
  // original edge per quotient edge (first in lex order)
  std::map<std::pair<int, int>, std::pair<int, int>> quotient;
  for (const Edge& e : g.edges()) {
    const int su = ci.supernode_of[e.u];
    const int sv = ci.supernode_of[e.v];
    if (su == sv) continue;
    const auto key = ordered_pair(su, sv);
    const auto rep = ordered_pair(e.u, e.v);
    auto [it, inserted] = quotient.try_emplace({key.first, key.second}, rep);
    if (!inserted && rep < it->second) it->second = rep;
  }
  std::vector<Edge> qedges;
  for (const auto& [key, rep] : quotient) {
    qedges.push_back({key.first, key.second, Rational(1)});
    ci.rep_edge.push_back(rep);
  }
  ci.quotient = Graph(sn, std::move(qedges));

  // every quotient edge must join separator-tree ancestor and descendant
  auto is_sep_ancestor = [&](int anc, int node) {
    int cur = node;
    while (cur >= 0) {
      if (cur == anc) return true;
      cur = tree.nodes[cur].parent;
    }
    return false;
  };
  for (const Edge& e : ci.quotient.edges()) {
    if (!is_sep_ancestor(e.u, e.v) && !is_sep_ancestor(e.v, e.u))
      throw std::runtime_error("non-backward cross edge found");
  }

  // T': DFS of the quotient from the root separator's supernode, visiting
  // neighbors by ascending (separator level, id); non-tree edges are then
  // backward by the DFS property
  ci.root_supernode = 0;
  ci.tprime_parent.assign(sn, -1);
  ci.tprime_parent_edge.assign(sn, -1);
  ci.tprime_depth.assign(sn, 0);
  ci.edge_in_tprime.assign(ci.quotient.edge_count(), 0);

  std::vector<std::vector<std::pair<int, int>>> order(sn);  // (supernode, edge)
  for (int s = 0; s < sn; ++s) {
    auto nbrs = ci.quotient.neighbors(s);
    std::sort(nbrs.begin(), nbrs.end(), [&](const auto& a, const auto& b) {
      return std::make_pair(tree.nodes[a.first].level, a.first) <
             std::make_pair(tree.nodes[b.first].level, b.first);
    });
    order[s] = std::move(nbrs);
  }
  std::vector<char> visited(sn, 0);
  std::vector<std::pair<int, size_t>> stack = {{ci.root_supernode, 0}};
  visited[ci.root_supernode] = 1;
  while (!stack.empty()) {
    auto& [s, idx] = stack.back();
    if (idx >= order[s].size()) {
      stack.pop_back();
      continue;
    }
    const auto [w, e] = order[s][idx++];
    if (visited[w]) continue;
    visited[w] = 1;
    ci.tprime_parent[w] = s;
    ci.tprime_parent_edge[w] = e;
    ci.tprime_depth[w] = ci.tprime_depth[s] + 1;
    ci.edge_in_tprime[e] = 1;
    stack.push_back({w, 0});
  }
  for (int s = 0; s < sn; ++s) {
    if (!visited[s]) throw std::logic_error("quotient graph is disconnected");
  }
  // DFS of an undirected graph leaves no cross edges; verify anyway
  for (int e = 0; e < ci.quotient.edge_count(); ++e) {
    if (ci.edge_in_tprime[e]) continue;
    const Edge& ed = ci.quotient.edge(e);
    if (!ci.is_tprime_ancestor(ed.u, ed.v) && !ci.is_tprime_ancestor(ed.v, ed.u))
      throw std::logic_error("non-backward cross edge found");
  }

  ci.supergroups.resize(groups.size());
  for (size_t gi = 0; gi < groups.size(); ++gi) {
    std::set<int> sg;
    for (int v : groups[gi]) sg.insert(ci.supernode_of[v]);
    ci.supergroups[gi].assign(sg.begin(), sg.end());
  }
  return ci;
}

SubTree rewire_back_edges(const std::vector<int>& solution_edges, const ContractedInstance& ci) {
  std::set<std::pair<int, int>> edges;
  std::set<int> nodes;
  auto add_tprime_edge = [&](int child) {
    const Edge& ed = ci.quotient.edge(ci.tprime_parent_edge[child]);
    edges.insert(ordered_pair(ed.u, ed.v));
  };
  for (int e : solution_edges) {
    const Edge& ed = ci.quotient.edge(e);
    nodes.insert(ed.u);
    nodes.insert(ed.v);
    if (ci.edge_in_tprime[e]) {
      edges.insert(ordered_pair(ed.u, ed.v));
      continue;
    }
    // backward edge: replace by the T' path between its endpoints
    int deep = ed.u, high = ed.v;
    if (ci.tprime_depth[deep] < ci.tprime_depth[high]) std::swap(deep, high);
    if (!ci.is_tprime_ancestor(high, deep))
      throw std::logic_error("solution edge is not backward");
    for (int cur = deep; cur != high; cur = ci.tprime_parent[cur]) add_tprime_edge(cur);
  }
  if (edges.empty()) {
    return SubTree::single_node(nodes.empty() ? ci.root_supernode : *nodes.begin());
  }
  return SubTree::from_edges({edges.begin(), edges.end()});
}

SubTree solve_md_gst_btw(const GstInstance& instance, int w, Rng& rng) {
  const auto errors = validate(instance);
  if (!errors.empty()) throw std::invalid_argument("invalid instance: " + errors.front());
  const Graph& g = instance.graph;
  if (!g.connected()) throw std::invalid_argument("graph not connected");

  const SeparatorTree sep = build_separator_tree(g, w);
  const SeparatorConnectors connectors = connect_separators(g, sep);
  const ContractedInstance ci = contract(g, sep, connectors, instance.groups);

  // min-degree GST on the backbone tree T'
  std::vector<Edge> tedges;
  for (int e = 0; e < ci.quotient.edge_count(); ++e) {
    if (ci.edge_in_tprime[e]) {
      tedges.push_back({ci.quotient.edge(e).u, ci.quotient.edge(e).v, Rational(1)});
    }
  }
  GstInstance tprime_instance;
  tprime_instance.graph = Graph(ci.quotient.node_count(), std::move(tedges));
  tprime_instance.groups = ci.supergroups;
  tprime_instance.cover_threshold = instance.cover_threshold;
  tprime_instance.canonicalize_groups();
  const SubTree backbone_solution = solve_md_gst_tree(tprime_instance, rng);

  // expand: chosen supernodes bring their connector edges, chosen T' edges
  // bring their representative original edge
  std::set<std::pair<int, int>> expanded;
  std::set<int> expanded_nodes;
  for (int s : backbone_solution.nodes) {
    for (int v : ci.members[s]) expanded_nodes.insert(v);
    for (const auto& e : ci.connector_edges[s]) {
      expanded.insert(e);
      expanded_nodes.insert(e.first);
      expanded_nodes.insert(e.second);
    }
  }
  for (const auto& [su, sv] : backbone_solution.edges) {
    const int qe = ci.quotient.edge_index(su, sv);
    const auto& rep = ci.rep_edge[qe];
    expanded.insert(rep);
    expanded_nodes.insert(rep.first);
    expanded_nodes.insert(rep.second);
  }

  // the expansion is connected; take its BFS spanning tree deterministically
  SubTree tree;
  if (expanded.empty()) {
    tree = SubTree::single_node(*expanded_nodes.begin());
  } else {
    std::map<int, std::vector<std::pair<int, int>>> adj;  // node -> (nbr, implicit)
    for (const auto& [u, v] : expanded) {
      adj[u].push_back({v, 0});
      adj[v].push_back({u, 0});
    }
    for (auto& [v, nbrs] : adj) std::sort(nbrs.begin(), nbrs.end());
    const int start = *expanded_nodes.begin();
    std::set<int> seen = {start};
    std::vector<int> queue = {start};
    std::vector<std::pair<int, int>> tree_edges;
    for (size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (const auto& [u, tag] : adj[v]) {
        if (seen.count(u)) continue;
        seen.insert(u);
        tree_edges.push_back(ordered_pair(v, u));
        queue.push_back(u);
      }
    }
    if (seen.size() != expanded_nodes.size())
      throw std::logic_error("expanded solution is not connected");
    tree = SubTree::from_edges(std::move(tree_edges));
  }

  return prune_leaves(g, instance, std::move(tree), -1);
}

std::string separator_tree_dot(const SeparatorTree& tree) {
  std::ostringstream os;
  os << "digraph separator_tree {\n";
  for (size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& node = tree.nodes[i];
    os << "  s" << i << " [label=\"{";
    for (size_t j = 0; j < node.members.size(); ++j)
      os << (j ? "," : "") << node.members[j];
    os << "}\\nlevel " << node.level << (node.leaf ? " leaf" : "") << "\"];\n";
    if (node.parent >= 0) os << "  s" << node.parent << " -> s" << i << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string tprime_dot(const ContractedInstance& ci) {
  std::ostringstream os;
  os << "graph tprime {\n";
  for (int s = 0; s < ci.quotient.node_count(); ++s) {
    os << "  n" << s << " [label=\"{";
    for (size_t j = 0; j < ci.members[s].size(); ++j)
      os << (j ? "," : "") << ci.members[s][j];
    os << "}\"];\n";
  }
  for (int e = 0; e < ci.quotient.edge_count(); ++e) {
    const Edge& ed = ci.quotient.edge(e);
    os << "  n" << ed.u << " -- n" << ed.v;
    if (!ci.edge_in_tprime[e]) os << " [style=dashed]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace steiner
