#include <doctest.h>

#include <set>

#include "steiner/generator.hpp"
#include "steiner/oracle.hpp"
#include "steiner/rng.hpp"

using namespace steiner;

namespace {

// independent oracle for the star reduction: minimum hitting set by subset
// enumeration over the element universe
int min_hitting_set(const std::vector<std::vector<int>>& sets) {
  std::set<int> universe;
  for (const auto& s : sets) universe.insert(s.begin(), s.end());
  const std::vector<int> elems(universe.begin(), universe.end());
  const int m = static_cast<int>(elems.size());
  for (int size = 0; size <= m; ++size) {
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      bool hits_all = true;
      for (const auto& s : sets) {
        bool hit = false;
        for (int e : s) {
          const int idx =
              static_cast<int>(std::lower_bound(elems.begin(), elems.end(), e) - elems.begin());
          if (mask >> idx & 1) hit = true;
        }
        if (!hit) {
          hits_all = false;
          break;
        }
      }
      if (hits_all) return size;
    }
  }
  return m;
}

}  // namespace

TEST_CASE("brute_md_gst: star with disjoint singleton groups needs the full star") {
  GstInstance inst;
  inst.graph = Graph(4, {{0, 1}, {0, 2}, {0, 3}});
  inst.root = 0;
  inst.groups = {{1}, {2}, {3}};
  const OracleResult r = brute_md_gst(inst);
  CHECK(r.max_degree == 3);
  CHECK(r.tree.edge_count() == 3);
}

TEST_CASE("brute_md_gst: hitting-set star from two overlapping sets") {
  const GstInstance inst = gen_hitting_set_star({{1, 2}, {2, 3}});
  const OracleResult r = brute_md_gst(inst);
  CHECK(r.max_degree == 1);
  CHECK(r.tree.edges == std::vector<std::pair<int, int>>{{0, 2}});
}

TEST_CASE("brute_md_gst: rooted path must be taken whole") {
  GstInstance inst;
  inst.graph = Graph(3, {{0, 1}, {1, 2}});
  inst.root = 0;
  inst.groups = {{2}};
  const OracleResult r = brute_md_gst(inst);
  CHECK(r.max_degree == 2);
}

TEST_CASE("brute_md_gst guards") {
  GstInstance big;
  big.graph = Graph(17, {{0, 1}});
  big.groups = {{1}};
  CHECK_THROWS_WITH_AS(brute_md_gst(big), "instance too large", std::invalid_argument);
}

TEST_CASE("brute_md_ktree basics") {
  KTreeInstance path;
  path.graph = Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  path.terminals = {0, 1, 2, 3, 4};
  path.k = 3;
  CHECK(brute_md_ktree(path).max_degree == 2);

  KTreeInstance star;
  star.graph = Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  star.terminals = {1, 2, 3, 4, 5};
  star.k = 2;
  const OracleResult r = brute_md_ktree(star);
  CHECK(r.max_degree == 2);  // two spokes through the center
  CHECK(r.terminals.size() == 2);

  KTreeInstance single;
  single.graph = Graph(3, {{0, 1}, {1, 2}});
  single.terminals = {2};
  single.k = 1;
  const OracleResult s = brute_md_ktree(single);
  CHECK(s.max_degree == 0);
  CHECK(s.tree.nodes == std::vector<int>{2});
  CHECK(s.terminals == std::vector<int>{2});
}

TEST_CASE("gen_hitting_set_star shapes") {
  const GstInstance two = gen_hitting_set_star({{1, 2}, {2, 3}});
  CHECK(two.graph.node_count() == 4);
  CHECK(two.group_count() == 2);
  CHECK(two.root == 0);

  const GstInstance one = gen_hitting_set_star({{1}});
  CHECK(brute_md_gst(one).max_degree == 1);

  const GstInstance disjoint = gen_hitting_set_star({{1}, {2}, {3}});
  CHECK(brute_md_gst(disjoint).max_degree == 3);

  CHECK_THROWS_WITH_AS(gen_hitting_set_star({{1}, {}}), "empty set present",
                       std::invalid_argument);
}

TEST_CASE("hitting-set star optimum equals the minimum hitting set size") {
  Rng rng(42);
  for (int trial = 0; trial < 120; ++trial) {
    const int n_sets = 1 + static_cast<int>(rng.next_below(4));
    std::vector<std::vector<int>> sets(n_sets);
    for (auto& s : sets) {
      const int size = 1 + static_cast<int>(rng.next_below(4));
      std::set<int> chosen;
      for (int i = 0; i < size; ++i) chosen.insert(1 + static_cast<int>(rng.next_below(6)));
      s.assign(chosen.begin(), chosen.end());
    }
    const GstInstance star = gen_hitting_set_star(sets);
    CHECK(brute_md_gst(star).max_degree == min_hitting_set(sets));
  }
}

TEST_CASE("brute_min_cost_gst honors degree bounds and costs") {
  // triangle with a cheap detour: root 0, group {2}
  GstInstance inst;
  inst.graph = Graph(3, {{0, 1, Rational(1)}, {1, 2, Rational(1)}, {0, 2, Rational(3)}});
  inst.root = 0;
  inst.groups = {{2}};
  CHECK(brute_min_cost_gst(inst).cost == Rational(2));

  // forbidding degree 2 at node 1 forces the expensive direct edge
  inst.bounds = {2, 1, 2};
  CHECK(brute_min_cost_gst(inst).cost == Rational(3));
}

TEST_CASE("brute_min_cost_gst: infeasible bounds") {
  GstInstance inst;
  inst.graph = Graph(3, {{0, 1}, {1, 2}});
  inst.root = 0;
  inst.groups = {{2}};
  inst.bounds = {1, 1, 1};  // node 1 must carry two edges but may carry one
  CHECK_THROWS_WITH_AS(brute_min_cost_gst(inst), "infeasible", std::runtime_error);
}

TEST_CASE("oracle tie-breaking is deterministic") {
  // two symmetric optimal substars; the lexicographically smaller edge wins
  GstInstance inst;
  inst.graph = Graph(3, {{0, 1}, {0, 2}});
  inst.root = 0;
  inst.groups = {{1, 2}};
  const OracleResult r = brute_md_gst(inst);
  CHECK(r.tree.edges == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("md oracle agrees with min-cost oracle on unit-cost trees") {
  // on trees with all bounds = n-1 and unit costs, the md optimum is a
  // feasible tree, so cost oracle cost <= edges of md tree and both cover
  for (int trial = 0; trial < 25; ++trial) {
    GstInstance inst = gen_random_tree_gst(8, 2, 3, 5000 + trial, "none", 1);
    inst.root = 0;
    const OracleResult md = brute_md_gst(inst);
    const OracleResult mc = brute_min_cost_gst(inst);
    CHECK(covers(md.tree, inst) >= inst.required_cover());
    CHECK(covers(mc.tree, inst) >= inst.required_cover());
    CHECK(mc.cost.to_double() <= md.tree.edge_count() + 1e-9);
  }
}
