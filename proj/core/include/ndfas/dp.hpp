#pragma once

#include <optional>
#include <vector>

#include "ndfas/decomp.hpp"
#include "ndfas/graph.hpp"

namespace ndfas {

enum class PartitionFamily {
  Singleton,              // the single partition (V(G))
  AllOrderedPartitions,   // every ordered partition of V(G)
};

struct DpOptions {
  int bag_cap = 8;
  /// Largest admissible number of table keys at a single node.
  double key_budget = 2e7;
};

/// (C, pi) certificate for a DP answer: C as a block index per vertex.
struct DpWitness {
  std::vector<int> block_of;
  int blocks = 0;
  Potential potential;
};

struct DpResult {
  DeletionSet set;
  DpWitness witness;
  long long table_entries = 0;
};

/// Keys at a node whose bag has `bag_size` vertices.
double dp_key_count(int bag_size, PartitionFamily family, Weight a, Weight b);

/// Minimum arc set that is (C, pi)-feasible for some C in the family and some
/// pi with values in [a, b], with its witness.
DpResult dp_solve(const WeightedDigraph& g, const NiceTreeDecomposition& nice, PartitionFamily family, Weight a,
                  Weight b, const DpOptions& opts = {});

/// Kept arcs (p, q) need block(p) < block(q), or equal blocks and
/// pi(p) - pi(q) + w >= 0.
bool is_cp_feasible(const WeightedDigraph& g, const DeletionSet& s, const DpWitness& witness);

// Instantiations for weights in {-1, 0, 1}. `detail` receives the full result
// whenever the DP ran.
std::optional<DeletionSet> solve_tw_wminus(const WeightedDigraph& g, int k, const DpOptions& opts = {},
                                           DpResult* detail = nullptr);
std::optional<DeletionSet> solve_tw_wplus(const WeightedDigraph& g, int k, const DpOptions& opts = {},
                                          DpResult* detail = nullptr);
std::optional<DeletionSet> solve_td_potential(const WeightedDigraph& g, int k, const DpOptions& opts = {},
                                              DpResult* detail = nullptr);

}  // namespace ndfas
