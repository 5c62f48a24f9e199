#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include "ndfas/graph.hpp"

namespace ndfas {

struct NonnegCycleOptions {
  /// Use random colorings instead of exhaustive path search. Positive answers
  /// are always real; a negative answer is wrong with probability at most
  /// `failure_probability`.
  bool color_coding = false;
  double failure_probability = 1e-6;
  std::uint64_t seed = 0x5eed;
};

/// True iff the arc lies on a cycle of weight >= 0. Weights must be +-1.
/// Searches simple head -> tail paths of at most 2 w_+ - 1 arcs.
bool nonneg_cycle_through_arc(const WeightedDigraph& g, ArcId arc, const NonnegCycleOptions& opts = {});

/// Smallest arc set of size <= k after whose removal no cycle uses an arc of U.
std::optional<DeletionSet> solve_subset_dfas(const WeightedDigraph& g, const std::vector<ArcId>& u, int k);

/// 2 w_+^2 + 2 w_+: a shorter negative cycle exists, or every negative cycle
/// has an arc lying only on negative cycles.
int pm1_short_cycle_bound(int w_plus);

struct PmOneStats {
  std::atomic<long long> nodes{0};
  std::atomic<long long> subset_calls{0};
};

/// Weights must be +-1. Short negative cycles are branched on; otherwise the
/// arcs on no non-negative cycle form U and the rest is a subset DFAS instance.
std::optional<DeletionSet> solve_pm1_few_positive(const WeightedDigraph& g, int k, const NonnegCycleOptions& opts = {},
                                                  PmOneStats* stats = nullptr);

}  // namespace ndfas
