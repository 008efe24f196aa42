#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "steiner/instance.hpp"
#include "steiner/rng.hpp"

namespace steiner {

/// Smallest prime in [2k, 4k] (one exists for every k >= 1).
int find_prime(int k);

enum class BinningMode { Randomized, Derandomized };

/// Two-point hash assignment of terminal indices to bins:
/// bin(i) = ((a*i + b) mod p) mod k with p = find_prime(k).
/// residue_count[j] counts residues in [0, p) landing in bin j, so the exact
/// per-bin hit probability under a uniform residue is residue_count[j] / p.
struct BinAssignment {
  int k = 1;
  int p = 2;
  int a = 1;
  int b = 0;
  BinningMode mode = BinningMode::Derandomized;
  std::vector<int> bin_of;         // per terminal index
  std::vector<int> residue_count;  // size k
};

/// Partition of the terminals into ceil(k / (5 log2 k)) uniformly random
/// bins (one bin when k < 4); empty bins are dropped.
std::vector<std::vector<int>> random_bins(const std::vector<int>& terminals, int k, Rng& rng);

BinAssignment two_point_bins(const std::vector<int>& terminals, int k, int a, int b);

/// Exhaustive scan over all (a, b) pairs for one making at least ceil(k/3)
/// bins intersect r_star (given as terminal indices). Returns the first such
/// pair in scan order; nullopt would falsify the expectation argument and is
/// preserved as a finding by callers.
std::optional<std::pair<int, int>> full_bins_exists(const std::vector<int>& r_star_indices,
                                                    int k, int p);

/// Any min-degree GST procedure usable as the reduction's subroutine.
using GstSolver = std::function<SubTree(const GstInstance&, Rng&)>;

struct ReductionOutcome {
  SubTree tree;
  int max_degree = 0;
  std::vector<int> terminals_covered;
  int rounds = 0;

  struct SweepRow {
    int round = 0;
    int a = 0;
    int b = 0;
    int bins_covered = 0;
    int degree = 0;
    int terminals = 0;
  };
  std::vector<SweepRow> sweep;  // derandomized mode only
};

/// Reduction from min-degree Steiner k-tree to min-degree GST. Each round
/// bins the remaining terminals into groups, solves the GST instance (with
/// everything collected so far contracted into a root supernode), and keeps
/// going until k terminals are in hand. Randomized mode covers all bins of
/// one random partition per round; derandomized mode sweeps every (a, b)
/// hash pair with partial cover ceil(k/3) and keeps the min-degree tree.
ReductionOutcome solve_md_ktree(const KTreeInstance& instance, const GstSolver& solver,
                                BinningMode mode, Rng& rng);

/// Fixture from the partial-cover reduction: hangs a complete binary tree
/// with exactly leaf_count leaves under the root and adds every new leaf to
/// every group. Internal gadget degree is at most 3; the root gains one edge.
GstInstance attach_binary_tree_gadget(const GstInstance& instance, int leaf_count);

}  // namespace steiner
