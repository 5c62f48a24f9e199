#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ndfas/graph.hpp"

namespace ndfas {

// Exhaustive reference solvers. Every search enumerates arc subsets by
// increasing size, then lexicographically by sorted arc ids, and returns the
// first subset that works. No pruning.

/// Calls `visit` on every subset of `items` of size <= max_size in the order
/// above; stops early when `visit` returns true. Returns whether it stopped.
bool for_each_subset(const std::vector<ArcId>& items, int max_size,
                     const std::function<bool(const std::vector<ArcId>&)>& visit);

/// Number of subsets of an m-set with size <= k.
double subset_count(int m, int k);

std::optional<DeletionSet> brute_force_ndfas(const WeightedDigraph& g, int k);

/// Arc set of size <= k leaving no X_i -> Y_j path with j <= i. Weights are
/// ignored. Terminal sets must be pairwise disjoint.
std::optional<DeletionSet> brute_force_skew_cut(const WeightedDigraph& g, const std::vector<std::vector<Vertex>>& xs,
                                                const std::vector<std::vector<Vertex>>& ys, int k);

/// Arc set of size <= k such that no cycle of the remainder uses an arc of U.
std::optional<DeletionSet> brute_force_subset_dfas(const WeightedDigraph& g, const std::vector<ArcId>& u, int k);

/// Plain feedback arc set (weights ignored).
std::optional<DeletionSet> brute_force_fas(const WeightedDigraph& g, int k);

/// Bounded edge directed (s,t)-cut: at most k arcs whose removal makes every
/// s -> t path longer than `ell` arcs.
std::optional<DeletionSet> brute_force_bedc(const WeightedDigraph& g, Vertex s, Vertex t, int k, int ell);

/// All simple directed cycles, each rotated to start at its smallest arc id.
std::vector<Cycle> enumerate_simple_cycles(const WeightedDigraph& g);

bool has_forbidden_skew_path(const WeightedDigraph& g, const ArcMask& deleted,
                             const std::vector<std::vector<Vertex>>& xs, const std::vector<std::vector<Vertex>>& ys);

/// True iff some cycle of g minus `deleted` contains an arc of U.
bool has_u_meeting_cycle(const WeightedDigraph& g, const ArcMask& deleted, const std::vector<ArcId>& u);

}  // namespace ndfas
