#include <doctest.h>

#include <cmath>
#include <set>

#include "steiner/contraction.hpp"
#include "steiner/generator.hpp"
#include "steiner/oracle.hpp"
#include "steiner/separator.hpp"

using namespace steiner;

namespace {

int ceil_4n5(int n) { return (4 * n + 4) / 5; }

double height_bound(int n) { return std::ceil(std::log(n) / std::log(1.25)) + 1; }

// members of separators and leaves partition the vertex set
void check_partition(const SeparatorTree& tree, int n) {
  std::vector<int> hits(n, 0);
  for (const auto& node : tree.nodes) {
    for (int v : node.members) ++hits[v];
  }
  for (int v = 0; v < n; ++v) CHECK(hits[v] == 1);
}

struct Pipeline {
  SeparatorTree sep;
  SeparatorConnectors connectors;
  ContractedInstance ci;
};

Pipeline run_pipeline(const GstInstance& inst, int w) {
  Pipeline p;
  p.sep = build_separator_tree(inst.graph, w);
  p.connectors = connect_separators(inst.graph, p.sep);
  p.ci = contract(inst.graph, p.sep, p.connectors, inst.groups);
  return p;
}

}  // namespace

TEST_CASE("balanced_separator on canonical shapes") {
  // star: the center alone splits everything
  const Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(balanced_separator(star, 0) == std::vector<int>{0});

  // C6: with the ceiling convention a single vertex already qualifies, and
  // the smallest qualifying set is returned
  const Graph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  const auto sep = balanced_separator(c6, 1);
  CHECK(static_cast<int>(sep.size()) <= 2);
  CHECK(sep == std::vector<int>{0});

  // P5 at w = 0: any single vertex qualifies; lexicographic pick is {0}
  const Graph p5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(balanced_separator(p5, 0) == std::vector<int>{0});
}

TEST_CASE("balanced_separator errors when the width bound is hopeless") {
  // K10: removing any single vertex leaves K9 with 9 > ceil(4*10/5) = 8
  std::vector<Edge> edges;
  for (int i = 0; i < 10; ++i) {
    for (int j = i + 1; j < 10; ++j) edges.push_back({i, j});
  }
  const Graph k10(10, std::move(edges));
  CHECK_THROWS_WITH_AS(balanced_separator(k10, 0), "no separator within width bound",
                       std::runtime_error);
}

TEST_CASE("build_separator_tree: tiny graphs become a single leaf") {
  const Graph g(2, {{0, 1}});
  const SeparatorTree tree = build_separator_tree(g, 1);
  REQUIRE(tree.nodes.size() == 1);
  CHECK(tree.nodes[0].leaf);
  CHECK(tree.depth() == 1);
}

TEST_CASE("build_separator_tree on P9 keeps the depth within the shrinkage bound") {
  std::vector<Edge> edges;
  for (int i = 0; i < 8; ++i) edges.push_back({i, i + 1});
  const Graph p9(9, std::move(edges));
  const SeparatorTree tree = build_separator_tree(p9, 1);
  check_partition(tree, 9);
  CHECK(tree.depth() <= height_bound(9) + 1);
  for (const auto& node : tree.nodes) {
    CHECK(static_cast<int>(node.members.size()) <= 2);
    if (node.parent >= 0) {
      const auto& parent = tree.nodes[node.parent];
      CHECK(node.region.size() <= static_cast<size_t>(ceil_4n5(parent.region.size())));
    }
  }
}

TEST_CASE("build_separator_tree on the 3x3 grid with w = 3") {
  GenParams params;
  params.kind = "grid-strip";
  params.rows = 3;
  params.cols = 3;
  params.groups = 1;
  params.seed = 4;
  const GstInstance inst = *generate(params).gst;
  const SeparatorTree tree = build_separator_tree(inst.graph, 3);
  check_partition(tree, 9);
  for (const auto& node : tree.nodes) {
    CHECK(node.members.size() <= 4);
    if (node.leaf) CHECK(node.region.size() <= 4);
  }
}

TEST_CASE("connect_separators: singleton pieces contribute no edges") {
  // path P5, w = 0: every separator is a single vertex, leaves are single
  std::vector<Edge> edges;
  for (int i = 0; i < 4; ++i) edges.push_back({i, i + 1});
  const Graph p5(5, std::move(edges));
  const SeparatorTree tree = build_separator_tree(p5, 0);
  const SeparatorConnectors conn = connect_separators(p5, tree);
  CHECK(conn.all.empty());
}

TEST_CASE("connector edges stay inside the requesting region") {
  for (int trial = 0; trial < 20; ++trial) {
    const GstInstance inst = gen_bounded_tw_gst(24, 2, 3, 4, 1700 + trial);
    const SeparatorTree tree = build_separator_tree(inst.graph, 2);
    const SeparatorConnectors conn = connect_separators(inst.graph, tree);
    for (size_t i = 0; i < tree.nodes.size(); ++i) {
      const std::set<int> region(tree.nodes[i].region.begin(), tree.nodes[i].region.end());
      for (const auto& [u, v] : conn.node_edges[i]) {
        CHECK(region.count(u));
        CHECK(region.count(v));
        CHECK(inst.graph.edge_index(u, v) >= 0);
      }
    }
    // every member set is connected through its own connector edges
    const ContractedInstance ci = contract(inst.graph, tree, conn, inst.groups);
    (void)ci;  // contract() asserts the structural properties internally
  }
}

TEST_CASE("contract: single supernode when the graph is one leaf") {
  GstInstance inst;
  inst.graph = Graph(3, {{0, 1}, {1, 2}});
  inst.groups = {{2}};
  const Pipeline p = run_pipeline(inst, 2);
  CHECK(p.ci.quotient.node_count() == 1);
  CHECK(p.ci.tprime_height() == 0);
  CHECK(p.ci.supergroups[0] == std::vector<int>{0});
}

TEST_CASE("contract keeps the T' height within the log bound on trees") {
  for (int trial = 0; trial < 10; ++trial) {
    const GstInstance inst = gen_random_tree_gst(30, 2, 4, 2500 + trial, "none", 1);
    const Pipeline p = run_pipeline(inst, 1);
    CHECK(p.ci.tprime_height() <= height_bound(30));
    // groups fully inside one separator map to that supernode
    for (size_t gi = 0; gi < inst.groups.size(); ++gi) {
      for (int v : inst.groups[gi]) {
        const int s = p.ci.supernode_of[v];
        CHECK(std::binary_search(p.ci.supergroups[gi].begin(), p.ci.supergroups[gi].end(), s));
      }
    }
  }
}

TEST_CASE("rewire_back_edges: solutions already inside T' are unchanged") {
  const GstInstance inst = gen_bounded_tw_gst(20, 2, 3, 3, 31);
  const Pipeline p = run_pipeline(inst, 2);
  std::vector<int> backbone;
  for (int e = 0; e < p.ci.quotient.edge_count(); ++e) {
    if (p.ci.edge_in_tprime[e]) backbone.push_back(e);
  }
  const SubTree rewired = rewire_back_edges(backbone, p.ci);
  CHECK(rewired.edge_count() == static_cast<int>(backbone.size()));
}

TEST_CASE("rewire_back_edges replaces a backward edge by the T' path") {
  // find an instance with at least one non-tree quotient edge
  for (int trial = 0; trial < 40; ++trial) {
    const GstInstance inst = gen_bounded_tw_gst(24, 2, 3, 3, 900 + trial);
    const Pipeline p = run_pipeline(inst, 2);
    int backward = -1;
    for (int e = 0; e < p.ci.quotient.edge_count(); ++e) {
      if (!p.ci.edge_in_tprime[e]) backward = e;
    }
    if (backward < 0) continue;

    const SubTree rewired = rewire_back_edges({backward}, p.ci);
    // all output edges are T' edges forming the ancestor path
    const Edge& ed = p.ci.quotient.edge(backward);
    int deep = ed.u, high = ed.v;
    if (p.ci.tprime_depth[deep] < p.ci.tprime_depth[high]) std::swap(deep, high);
    CHECK(rewired.edge_count() ==
          p.ci.tprime_depth[deep] - p.ci.tprime_depth[high]);
    for (const auto& [u, v] : rewired.edges) {
      const int qe = p.ci.quotient.edge_index(u, v);
      CHECK(p.ci.edge_in_tprime[qe]);
    }
    return;
  }
  FAIL("no instance with a backward edge found");
}

TEST_CASE("rewired quotient optima stay feasible with bounded degree growth") {
  for (int trial = 0; trial < 10; ++trial) {
    const GstInstance inst = gen_bounded_tw_gst(22, 2, 3, 3, 4400 + trial);
    const Pipeline p = run_pipeline(inst, 2);
    if (p.ci.quotient.node_count() > 14) continue;

    GstInstance quotient_inst;
    quotient_inst.graph = p.ci.quotient;
    quotient_inst.groups = p.ci.supergroups;
    quotient_inst.canonicalize_groups();
    const OracleResult opt = brute_md_gst(quotient_inst);
    if (opt.tree.edge_count() == 0) continue;

    std::vector<int> sol_edges;
    for (const auto& [u, v] : opt.tree.edges)
      sol_edges.push_back(p.ci.quotient.edge_index(u, v));
    const SubTree rewired = rewire_back_edges(sol_edges, p.ci);

    CHECK(covers(rewired, quotient_inst) >= quotient_inst.required_cover());
    const int d_in = std::max(1, opt.max_degree);
    const int depth = p.ci.sep_tree_depth;
    const int w = 2;
    for (int s = 0; s < p.ci.quotient.node_count(); ++s) {
      const int grow = degree_in(rewired, s) - degree_in(opt.tree, s);
      CHECK(grow <= 2 * (w + 1) * depth * d_in);
    }
  }
}

TEST_CASE("solve_md_gst_btw produces feasible trees on seeded bounded-tw instances") {
  for (int trial = 0; trial < 8; ++trial) {
    const GstInstance inst = gen_bounded_tw_gst(14, 2, 3, 3, 6600 + trial);
    Rng rng(42 + trial);
    const SubTree tree = solve_md_gst_btw(inst, 2, rng);
    CHECK(is_subtree_of(tree, inst.graph));
    CHECK(covers(tree, inst) >= inst.required_cover());
  }
}

TEST_CASE("solve_md_gst_btw covers a group inside the root separator locally") {
  // the root separator's supernode covers the group, so the answer stays
  // inside that supernode's expansion
  for (int trial = 0; trial < 30; ++trial) {
    const GstInstance seeded = gen_bounded_tw_gst(18, 2, 1, 2, 7700 + trial);
    const SeparatorTree sep = build_separator_tree(seeded.graph, 2);
    if (sep.nodes[0].leaf) continue;
    GstInstance inst = seeded;
    inst.groups = {sep.nodes[0].members};
    inst.canonicalize_groups();
    Rng rng(5 + trial);
    const SubTree tree = solve_md_gst_btw(inst, 2, rng);
    CHECK(covers(tree, inst) == 1);
    // within the root region (every node belongs to it)
    const std::set<int> root_region(sep.nodes[0].region.begin(), sep.nodes[0].region.end());
    for (int v : tree.nodes) CHECK(root_region.count(v));
    return;
  }
  FAIL("no instance with an internal root separator found");
}

TEST_CASE("DOT exports are emitted") {
  const GstInstance inst = gen_bounded_tw_gst(16, 2, 2, 3, 88);
  const Pipeline p = run_pipeline(inst, 2);
  CHECK(separator_tree_dot(p.sep).find("digraph") != std::string::npos);
  CHECK(tprime_dot(p.ci).find("graph tprime") != std::string::npos);
}
