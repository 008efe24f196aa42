#include "steiner/generator.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "steiner/oracle.hpp"
#include "steiner/rng.hpp"

namespace steiner {

namespace {

std::vector<int> sample_distinct(int n, int count, Rng& rng) {
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  std::vector<int> out;
  count = std::min(count, n);
  for (int i = 0; i < count; ++i) {
    const int j = i + static_cast<int>(rng.next_below(n - i));
    std::swap(pool[i], pool[j]);
    out.push_back(pool[i]);
  }
  return out;
}

Rational draw_cost(int max_cost, Rng& rng) {
  if (max_cost <= 1) return Rational(1);
  return Rational(1 + static_cast<int>(rng.next_below(max_cost)));
}

// uniform random attachment tree: node i hangs below a uniform earlier node
Graph random_attachment_tree(int n, int max_cost, Rng& rng) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    const int parent = static_cast<int>(rng.next_below(i));
    edges.push_back({parent, i, draw_cost(max_cost, rng)});
  }
  return Graph(n, std::move(edges));
}

// partial k-tree of width w: clique on w+1 nodes, every further node joins a
// random w-subset of an existing (w+1)-clique; then random deletions that
// keep the graph connected
Graph partial_ktree(int n, int w, double delete_prob, int max_cost, Rng& rng) {
  if (n < w + 1) w = n - 1;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> cliques;
  std::vector<int> base;
  for (int i = 0; i <= w; ++i) base.push_back(i);
  for (int i = 0; i <= w; ++i) {
    for (int j = i + 1; j <= w; ++j) edges.push_back({i, j, Rational(1)});
  }
  cliques.push_back(base);
  for (int v = w + 1; v < n; ++v) {
    const auto& clique = cliques[rng.next_below(cliques.size())];
    const int drop = static_cast<int>(rng.next_below(clique.size()));
    std::vector<int> attach;
    for (size_t i = 0; i < clique.size(); ++i) {
      if (static_cast<int>(i) != drop) attach.push_back(clique[i]);
    }
    for (int u : attach) edges.push_back({u, v, Rational(1)});
    attach.push_back(v);
    std::sort(attach.begin(), attach.end());
    cliques.push_back(std::move(attach));
  }

  // random deletions, connectivity preserved
  std::vector<int> order(edges.size());
  for (size_t i = 0; i < edges.size(); ++i) order[i] = static_cast<int>(i);
  for (size_t i = edges.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng.next_below(i)]);
  }
  std::set<int> removed;
  for (int idx : order) {
    if (!rng.next_bernoulli(delete_prob)) continue;
    removed.insert(idx);
    std::vector<Edge> kept;
    for (size_t i = 0; i < edges.size(); ++i) {
      if (!removed.count(static_cast<int>(i))) kept.push_back(edges[i]);
    }
    if (!Graph(n, kept).connected()) removed.erase(idx);
  }
  std::vector<Edge> kept;
  for (size_t i = 0; i < edges.size(); ++i) {
    if (!removed.count(static_cast<int>(i))) {
      Edge e = edges[i];
      e.cost = draw_cost(max_cost, rng);
      kept.push_back(e);
    }
  }
  return Graph(n, std::move(kept));
}

Graph grid_strip(int rows, int cols, int max_cost, Rng& rng) {
  const int n = rows * cols;
  auto id = [&](int r, int c) { return r * cols + c; };
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), draw_cost(max_cost, rng)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), draw_cost(max_cost, rng)});
    }
  }
  return Graph(n, std::move(edges));
}

std::vector<std::vector<int>> random_groups(int n, int groups, int max_group_size, Rng& rng) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < groups; ++i) {
    const int size = 1 + static_cast<int>(rng.next_below(std::max(1, max_group_size)));
    auto grp = sample_distinct(n, size, rng);
    std::sort(grp.begin(), grp.end());
    out.push_back(std::move(grp));
  }
  return out;
}

std::vector<int> make_bounds(const Graph& g, const std::string& mode, int uniform_bound) {
  if (mode == "none") return {};
  std::vector<int> bounds(g.node_count(), 1);
  for (int v = 0; v < g.node_count(); ++v) {
    bounds[v] = mode == "degree" ? std::max(1, g.degree(v)) : std::max(1, uniform_bound);
  }
  return bounds;
}

}  // namespace

Generated generate(const GenParams& p) {
  Rng rng(p.seed);
  Generated out;

  Graph graph;
  if (p.kind == "random-tree") {
    graph = random_attachment_tree(p.n, p.max_cost, rng);
  } else if (p.kind == "bounded-tw") {
    graph = partial_ktree(p.n, p.w, p.delete_prob, p.max_cost, rng);
  } else if (p.kind == "star") {
    std::vector<Edge> edges;
    for (int i = 1; i <= p.leaves; ++i) edges.push_back({0, i, Rational(1)});
    graph = Graph(p.leaves + 1, std::move(edges));
  } else if (p.kind == "hitting-set-star") {
    out.gst = gen_hitting_set_star(p.sets);
    return out;
  } else if (p.kind == "grid-strip") {
    graph = grid_strip(p.rows, p.cols, p.max_cost, rng);
  } else {
    throw std::invalid_argument("unknown generator kind \"" + p.kind + "\"");
  }
  const int n = graph.node_count();

  if (p.k > 0) {
    KTreeInstance inst;
    inst.graph = std::move(graph);
    const int t = std::min(std::max(p.terminals, p.k), n);
    inst.terminals = sample_distinct(n, t, rng);  // sampled order is the hash order
    inst.k = p.k;
    out.ktree = std::move(inst);
    return out;
  }

  GstInstance inst;
  inst.graph = std::move(graph);
  if (p.kind == "star") {
    // one singleton group per leaf unless a smaller count was asked for
    const int count = std::min(p.groups > 0 ? p.groups : p.leaves, p.leaves);
    for (int i = 1; i <= count; ++i) inst.groups.push_back({i});
    inst.root = 0;
  } else {
    inst.groups = random_groups(n, std::max(1, p.groups), p.max_group_size, rng);
    if (p.rooted) inst.root = static_cast<int>(rng.next_below(n));
  }
  inst.bounds = make_bounds(inst.graph, p.bounds_mode, p.uniform_bound);
  inst.canonicalize_groups();
  out.gst = std::move(inst);
  return out;
}

GstInstance gen_random_tree_gst(int n, int groups, int max_group_size, std::uint64_t seed,
                                const std::string& bounds_mode, int max_cost) {
  GenParams p;
  p.kind = "random-tree";
  p.n = n;
  p.groups = groups;
  p.max_group_size = max_group_size;
  p.seed = seed;
  p.bounds_mode = bounds_mode;
  p.max_cost = max_cost;
  return *generate(p).gst;
}

GstInstance gen_bounded_tw_gst(int n, int w, int groups, int max_group_size,
                               std::uint64_t seed) {
  GenParams p;
  p.kind = "bounded-tw";
  p.n = n;
  p.w = w;
  p.groups = groups;
  p.max_group_size = max_group_size;
  p.seed = seed;
  return *generate(p).gst;
}

KTreeInstance gen_random_ktree(int n, int terminals, int k, std::uint64_t seed,
                               bool tree_graph) {
  GenParams p;
  p.kind = tree_graph ? "random-tree" : "bounded-tw";
  p.n = n;
  p.w = 2;
  p.seed = seed;
  p.terminals = terminals;
  p.k = k;
  return *generate(p).ktree;
}

}  // namespace steiner
