#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "steiner/instance.hpp"

namespace steiner {

/// Seeded instance generation. Every kind is deterministic for a fixed
/// parameter set and seed; the draw order is part of the format.
struct GenParams {
  std::string kind = "random-tree";  // random-tree | bounded-tw | star |
                                     // hitting-set-star | grid-strip
  std::uint64_t seed = 1;
  int n = 12;

  // bounded-tw: grow a width-w partial k-tree, then delete random edges
  // while keeping the graph connected (width stays <= w)
  int w = 2;
  double delete_prob = 0.3;

  // grid-strip
  int rows = 3;
  int cols = 5;

  // star
  int leaves = 4;

  // group layout
  int groups = 3;
  int max_group_size = 4;

  // degree bounds: none | degree (b = deg) | uniform (b = uniform_bound)
  std::string bounds_mode = "none";
  int uniform_bound = 2;

  // integer edge costs in [1, max_cost]
  int max_cost = 1;

  bool rooted = true;

  // hitting-set-star
  std::vector<std::vector<int>> sets;

  // emit a k-tree instance instead of groups when k > 0
  int terminals = 0;
  int k = 0;
};

struct Generated {
  std::optional<GstInstance> gst;
  std::optional<KTreeInstance> ktree;
};

Generated generate(const GenParams& params);

/// Convenience wrappers used by tests and benchmarks.
GstInstance gen_random_tree_gst(int n, int groups, int max_group_size, std::uint64_t seed,
                                const std::string& bounds_mode = "degree", int max_cost = 8);
GstInstance gen_bounded_tw_gst(int n, int w, int groups, int max_group_size,
                               std::uint64_t seed);
KTreeInstance gen_random_ktree(int n, int terminals, int k, std::uint64_t seed,
                               bool tree_graph = false);

}  // namespace steiner
