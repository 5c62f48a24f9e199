#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ndfas/graph.hpp"

namespace ndfas {

struct SkewInstance {
  WeightedDigraph graph;  // weights ignored
  std::vector<std::vector<Vertex>> sources;
  std::vector<std::vector<Vertex>> sinks;
  int budget = 0;
};

struct SkewOptions {
  /// Route every call to the exhaustive oracle instead.
  bool use_oracle = false;
};

/// Arc set of size <= budget leaving no sources[i] -> sinks[j] path with
/// j <= i, or nullopt.
std::optional<DeletionSet> solve_skew_separator(const SkewInstance& inst, const SkewOptions& opts = {});

/// Every arc set of size <= k that separates `from` from `to` and includes all
/// important cuts among them. Cuts are reported in a fixed order.
std::vector<DeletionSet> important_cuts(const WeightedDigraph& g, const ArcMask& deleted,
                                        const std::vector<Vertex>& from, const std::vector<Vertex>& to, int k);

struct ZeroPropagationGraph {
  WeightedDigraph graph;               // zero arcs only
  std::vector<Vertex> plus_of;         // out-copy (the vertex itself if not split)
  std::vector<Vertex> minus_of;        // in-copy (the vertex itself if not split)
  std::vector<bool> split;             // endpoints of non-zero arcs
  std::vector<ArcId> arc_back_map;     // new arc id -> original zero arc id
};

/// Drops non-zero arcs and splits their endpoints z into z+ (keeps outgoing
/// zero arcs) and z- (keeps incoming ones). Masked arcs are ignored entirely.
ZeroPropagationGraph build_zero_propagation_graph(const WeightedDigraph& g);
ZeroPropagationGraph build_zero_propagation_graph(const WeightedDigraph& g, const ArcMask& deleted);

/// Ordered Bell number (Fubini number) of n, as a double.
double ordered_bell(int n);

/// Visits every ordered partition of {0..n-1} once as a block index per item:
/// first by block count, then by the assignment vector in lexicographic order.
/// Stops when `visit` returns true. Throws ResourceError above `cap` items.
bool for_each_ordered_partition(int n, const std::function<bool(const std::vector<int>& block_of, int blocks)>& visit,
                                int cap = 10);

/// Materialized form of the enumeration above, blocks listed in order.
std::vector<std::vector<std::vector<int>>> enumerate_ordered_partitions(int n, int cap = 10);

struct NonzeroOptions {
  SkewOptions skew;
  int partition_cap = 10;
  /// Skip partitions that put the tail of a kept negative arc in a later or
  /// equal block than its head. Off by default.
  bool prune_negative_arcs = false;
};

struct NonzeroStats {
  long long guesses = 0;      // subsets A' of the non-zero arcs tried
  long long partitions = 0;   // ordered partitions tried
  long long skew_calls = 0;
};

/// Parameter w_+ + w_-: guess the deleted non-zero arcs, then an ordered
/// partition of the remaining non-zero endpoints, and solve the resulting skew
/// separator instance on the zero-weight propagation graph.
std::optional<DeletionSet> solve_nonzero_count(const WeightedDigraph& g, int k, const NonzeroOptions& opts = {},
                                               NonzeroStats* stats = nullptr);

}  // namespace ndfas
