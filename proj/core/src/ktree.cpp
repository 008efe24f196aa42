#include "steiner/ktree.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "steiner/rounding.hpp"  // ceil_log2

namespace steiner {

namespace {

bool is_prime(int v) {
  if (v < 2) return false;
  for (int d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

}  // namespace

int find_prime(int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  for (int p = 2 * k; p <= 4 * k; ++p) {
    if (is_prime(p)) return p;
  }
  throw std::logic_error("no prime in [2k, 4k]");  // impossible by Bertrand
}

std::vector<std::vector<int>> random_bins(const std::vector<int>& terminals, int k, Rng& rng) {
  int bins = 1;
  if (k >= 4) bins = static_cast<int>(std::ceil(k / (5.0 * std::log2(k))));
  if (bins < 1) bins = 1;
  std::vector<std::vector<int>> assignment(bins);
  for (int t : terminals) {
    assignment[rng.next_below(bins)].push_back(t);
  }
  std::vector<std::vector<int>> out;
  for (auto& bin : assignment) {
    if (!bin.empty()) {
      std::sort(bin.begin(), bin.end());
      out.push_back(std::move(bin));
    }
  }
  return out;
}

BinAssignment two_point_bins(const std::vector<int>& terminals, int k, int a, int b) {
  BinAssignment out;
  out.k = k;
  out.p = find_prime(k);
  if (a < 1 || a > out.p - 1) throw std::invalid_argument("a out of range [1, p-1]");
  if (b < 0 || b > out.p - 1) throw std::invalid_argument("b out of range [0, p-1]");
  out.a = a;
  out.b = b;
  out.mode = BinningMode::Derandomized;
  out.bin_of.resize(terminals.size());
  for (size_t i = 0; i < terminals.size(); ++i) {
    out.bin_of[i] = static_cast<int>(((static_cast<long long>(a) * i + b) % out.p) % k);
  }
  out.residue_count.assign(k, 0);
  for (int r = 0; r < out.p; ++r) ++out.residue_count[r % k];
  return out;
}

std::optional<std::pair<int, int>> full_bins_exists(const std::vector<int>& r_star_indices,
                                                    int k, int p) {
  const int needed = (k + 2) / 3;  // ceil(k/3)
  for (int a = 1; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      std::vector<char> hit(k, 0);
      int full = 0;
      for (int i : r_star_indices) {
        const int bin = static_cast<int>(((static_cast<long long>(a) * i + b) % p) % k);
        if (!hit[bin]) {
          hit[bin] = 1;
          ++full;
        }
      }
      if (full >= needed) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

namespace {

// Working view of the instance with everything collected so far contracted
// into a root supernode (new id 0). Quotient edges remember a representative
// original edge for expansion; the lexicographically first one wins.
struct ContractedView {
  Graph graph;
  std::optional<int> supernode;            // new id, when a contraction happened
  std::vector<int> to_original;            // new id -> original id (supernode -> -1)
  std::vector<int> to_working;             // original id -> new id (-1 if inside acc)
  std::vector<std::pair<int, int>> rep;    // per new edge: original endpoints
};

ContractedView make_view(const Graph& g, const std::set<int>& acc_nodes) {
  ContractedView view;
  const int n = g.node_count();
  view.to_working.assign(n, -1);
  if (acc_nodes.empty()) {
    view.graph = g;
    view.to_original.resize(n);
    for (int v = 0; v < n; ++v) {
      view.to_original[v] = v;
      view.to_working[v] = v;
    }
    for (const Edge& e : g.edges()) view.rep.push_back({e.u, e.v});
    return view;
  }
  view.supernode = 0;
  view.to_original.push_back(-1);
  for (int v = 0; v < n; ++v) {
    if (!acc_nodes.count(v)) {
      view.to_working[v] = static_cast<int>(view.to_original.size());
      view.to_original.push_back(v);
    }
  }
  std::map<std::pair<int, int>, std::pair<int, int>> quotient;  // edge -> original rep
  for (const Edge& e : g.edges()) {
    const int wu = acc_nodes.count(e.u) ? 0 : view.to_working[e.u];
    const int wv = acc_nodes.count(e.v) ? 0 : view.to_working[e.v];
    if (wu == wv) continue;  // inside the supernode
    const auto key = ordered_pair(wu, wv);
    quotient.try_emplace({key.first, key.second}, std::make_pair(e.u, e.v));
  }
  std::vector<Edge> edges;
  for (const auto& [key, orig] : quotient) {
    edges.push_back({key.first, key.second, Rational(1)});
    view.rep.push_back(orig);
  }
  view.graph = Graph(static_cast<int>(view.to_original.size()), std::move(edges));
  return view;
}

}  // namespace

ReductionOutcome solve_md_ktree(const KTreeInstance& instance, const GstSolver& solver,
                                BinningMode mode, Rng& rng) {
  const auto errors = validate(instance);
  if (!errors.empty()) throw std::invalid_argument("invalid instance: " + errors.front());
  const Graph& g = instance.graph;
  const int k = instance.k;
  const int round_cap = 10 * ceil_log2(k + 2) * ceil_log2(k + 2);

  std::set<int> acc_nodes;
  std::set<std::pair<int, int>> acc_edges;
  std::vector<int> remaining = instance.terminals;  // given order preserved
  int k_rem = k;

  ReductionOutcome outcome;
  while (k_rem > 0) {
    if (outcome.rounds >= round_cap) throw std::runtime_error("round cap exceeded");
    const std::uint64_t round_master = rng.next_u64();
    const ContractedView view = make_view(g, acc_nodes);

    std::vector<int> working_terminals;
    for (int t : remaining) working_terminals.push_back(view.to_working[t]);

    SubTree chosen;
    bool have_choice = false;
    if (mode == BinningMode::Randomized) {
      GstInstance gst;
      gst.graph = view.graph;
      gst.groups = random_bins(working_terminals, k_rem, rng);
      gst.root = view.supernode;
      gst.canonicalize_groups();
      Rng sub = Rng::substream(round_master, 0);
      chosen = solver(gst, sub);
      have_choice = true;
    } else {
      const int p = find_prime(k_rem);
      int best_degree = 0;
      for (int a = 1; a < p; ++a) {
        for (int b = 0; b < p; ++b) {
          const BinAssignment bins = two_point_bins(working_terminals, k_rem, a, b);
          std::vector<std::vector<int>> groups(k_rem);
          for (size_t i = 0; i < working_terminals.size(); ++i) {
            groups[bins.bin_of[i]].push_back(working_terminals[i]);
          }
          groups.erase(std::remove_if(groups.begin(), groups.end(),
                                      [](const auto& grp) { return grp.empty(); }),
                       groups.end());
          GstInstance gst;
          gst.graph = view.graph;
          gst.groups = std::move(groups);
          gst.root = view.supernode;
          gst.cover_threshold =
              std::min((k_rem + 2) / 3, static_cast<int>(gst.groups.size()));
          gst.canonicalize_groups();
          Rng sub = Rng::substream(round_master, static_cast<std::uint64_t>(a) * p + b);
          SubTree candidate = solver(gst, sub);
          const int deg = max_degree(candidate);
          int terminals_touched = 0;
          for (int t : working_terminals) {
            if (candidate.contains_node(t)) ++terminals_touched;
          }
          outcome.sweep.push_back({outcome.rounds, a, b, covers(candidate, gst), deg,
                                   terminals_touched});
          if (!have_choice || deg < best_degree) {
            chosen = std::move(candidate);
            best_degree = deg;
            have_choice = true;
          }
        }
      }
    }
    if (!have_choice) throw std::runtime_error("gst solver failed");

    // expand the round tree back into original node ids
    for (const auto& [wu, wv] : chosen.edges) {
      const int e = view.graph.edge_index(wu, wv);
      const auto [ou, ov] = view.rep[e];
      acc_edges.insert({std::min(ou, ov), std::max(ou, ov)});
      acc_nodes.insert(ou);
      acc_nodes.insert(ov);
    }
    for (int wnode : chosen.nodes) {
      if (view.supernode && wnode == *view.supernode) continue;
      acc_nodes.insert(view.to_original[wnode]);
    }

    std::vector<int> still_remaining;
    for (int t : remaining) {
      if (!acc_nodes.count(t)) still_remaining.push_back(t);
    }
    remaining = std::move(still_remaining);
    k_rem = k - (static_cast<int>(instance.terminals.size()) -
                 static_cast<int>(remaining.size()));
    ++outcome.rounds;
  }

  SubTree tree;
  if (acc_edges.empty()) {
    tree = SubTree::single_node(acc_nodes.empty() ? 0 : *acc_nodes.begin());
  } else {
    tree = SubTree::from_edges({acc_edges.begin(), acc_edges.end()});
  }

  // trim leaves that are not needed to keep k terminals on the tree
  std::set<int> terminal_set(instance.terminals.begin(), instance.terminals.end());
  bool progress = true;
  while (progress && tree.edge_count() > 0) {
    progress = false;
    int in_tree = 0;
    for (int v : tree.nodes) in_tree += terminal_set.count(v);
    for (int v : tree.nodes) {
      if (degree_in(tree, v) != 1) continue;
      const bool is_terminal = terminal_set.count(v) > 0;
      if (is_terminal && in_tree - 1 < k) continue;
      int neighbor = -1;
      std::vector<std::pair<int, int>> edges;
      for (const auto& e : tree.edges) {
        if (e.first == v) {
          neighbor = e.second;
        } else if (e.second == v) {
          neighbor = e.first;
        } else {
          edges.push_back(e);
        }
      }
      tree = edges.empty() ? SubTree::single_node(neighbor)
                           : SubTree::from_edges(std::move(edges));
      progress = true;
      break;
    }
  }

  outcome.tree = tree;
  outcome.max_degree = max_degree(tree);
  for (int v : tree.nodes) {
    if (terminal_set.count(v)) outcome.terminals_covered.push_back(v);
  }
  return outcome;
}

GstInstance attach_binary_tree_gadget(const GstInstance& instance, int leaf_count) {
  if (leaf_count < 1) throw std::invalid_argument("leaf_count must be positive");
  if (!instance.root) throw std::invalid_argument("root missing");

  GstInstance out = instance;
  std::vector<Edge> edges = instance.graph.edges();
  int next_id = instance.graph.node_count();
  std::vector<int> new_leaves;

  // build the complete binary tree top-down, splitting the leaf budget
  struct Pending {
    int parent;
    int leaves;
  };
  std::vector<Pending> stack = {{*instance.root, leaf_count}};
  while (!stack.empty()) {
    const Pending cur = stack.back();
    stack.pop_back();
    const int node = next_id++;
    edges.push_back({cur.parent, node, Rational(1)});
    if (cur.leaves == 1) {
      new_leaves.push_back(node);
    } else {
      stack.push_back({node, cur.leaves - cur.leaves / 2});  // ceil half
      stack.push_back({node, cur.leaves / 2});
    }
  }

  out.graph = Graph(next_id, std::move(edges));
  for (auto& group : out.groups) {
    group.insert(group.end(), new_leaves.begin(), new_leaves.end());
  }
  out.canonicalize_groups();
  return out;
}

}  // namespace steiner
