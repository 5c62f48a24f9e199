#pragma once

#include <atomic>
#include <functional>
#include <optional>

#include "ndfas/graph.hpp"

namespace ndfas {

struct BranchOptions {
  /// Worker threads for the top-level branches. The answer does not depend on
  /// this value: the lowest-index successful branch always wins.
  int threads = 1;
  /// In branch i on cycle arcs a_1..a_l, forbid deleting a_1..a_{i-1}. Off by
  /// default.
  bool exclude_earlier_siblings = false;
};

struct BranchStats {
  std::atomic<long long> nodes{0};
  std::atomic<long long> leaves{0};
  /// Branched on a negative cycle longer than the caller's bound L.
  std::atomic<long long> long_cycles{0};
};

/// A_- when w_-(g) <= k; nullopt means "not applicable".
std::optional<DeletionSet> solve_trivial_few_negative(const WeightedDigraph& g, int k);

/// Branches on the arcs of a shortest negative cycle, at most k levels deep.
std::optional<DeletionSet> solve_bounded_cycle_branching(const WeightedDigraph& g, int k, int cycle_bound,
                                                         const BranchOptions& opts = {}, BranchStats* stats = nullptr);

/// Cycle bound 2^(td-1) from the exact (or upper-bound) treedepth.
int td_cycle_bound(const WeightedDigraph& g);
std::optional<DeletionSet> solve_td_plus_k(const WeightedDigraph& g, int k, const BranchOptions& opts = {},
                                           BranchStats* stats = nullptr);

/// Weights must be +-1. Cycle bound 2 w_-; falls back to A_- when w_- <= k.
std::optional<DeletionSet> solve_pm1_few_negative(const WeightedDigraph& g, int k, const BranchOptions& opts = {},
                                                  BranchStats* stats = nullptr);

using BudgetSolver = std::function<std::optional<DeletionSet>(int budget)>;

/// Runs `solve` for budgets 0..k and returns the first answer, which is then a
/// minimum solution whenever `solve` is exact.
std::optional<DeletionSet> solve_minimum(const BudgetSolver& solve, int k);

}  // namespace ndfas
