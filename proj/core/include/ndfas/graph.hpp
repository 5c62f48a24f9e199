#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ndfas {

using Vertex = int;
using ArcId = int;
using Weight = std::int64_t;

/// Raised when a caller hands us something that violates an input contract
/// (unknown arc id, malformed file, wrong weight alphabet, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an exact procedure would exceed a configured cap.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

struct Arc {
  ArcId id;
  Vertex tail;
  Vertex head;
  Weight weight;
};

/// `deleted[a]` marks arc `a` as removed. Solvers pass masks around instead of
/// rebuilding graphs so that arc ids stay stable.
using ArcMask = std::vector<bool>;

/// Finite loopless directed multigraph with integer arc weights.
/// Arc ids are dense in [0, m) and equal to the position in `arcs()`.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  explicit WeightedDigraph(int vertex_count);
  WeightedDigraph(int vertex_count, std::vector<Arc> arcs);

  /// Appends an arc and returns its id.
  ArcId add_arc(Vertex tail, Vertex head, Weight weight);

  int vertex_count() const { return vertex_count_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  std::span<const Arc> arcs() const { return arcs_; }
  const Arc& arc(ArcId id) const { return arcs_.at(static_cast<std::size_t>(id)); }
  std::span<const ArcId> out_arcs(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
  std::span<const ArcId> in_arcs(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }

  std::vector<ArcId> negative_arcs() const;
  std::vector<ArcId> zero_arcs() const;
  std::vector<ArcId> positive_arcs() const;
  std::vector<ArcId> nonzero_arcs() const;
  int w_minus() const;
  int w_plus() const;

  bool weights_within(Weight lo, Weight hi) const;
  /// True iff every weight is -1 or +1.
  bool weights_pm_one() const;

  ArcMask empty_mask() const { return ArcMask(arcs_.size(), false); }

  /// Copy without the masked arcs; `kept_ids[new_id]` is the original id.
  WeightedDigraph without(const ArcMask& deleted, std::vector<ArcId>* kept_ids = nullptr) const;

 private:
  int vertex_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<ArcId>> out_;
  std::vector<std::vector<ArcId>> in_;
};

/// A simple directed cycle given by its arcs, rotated to start at the
/// smallest arc id.
struct Cycle {
  std::vector<ArcId> arc_ids;
  int length = 0;
  Weight weight = 0;
};

/// Feasible potential: values[u] - values[v] + w(a) >= 0 on every arc (u, v).
struct Potential {
  std::vector<Weight> values;
};

/// Sorted, duplicate-free set of arc ids.
class DeletionSet {
 public:
  DeletionSet() = default;
  explicit DeletionSet(std::vector<ArcId> ids);

  std::span<const ArcId> arc_ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(ArcId id) const;
  void insert(ArcId id);
  DeletionSet united(const DeletionSet& other) const;
  ArcMask to_mask(int arc_count) const;

  friend bool operator==(const DeletionSet&, const DeletionSet&) = default;

 private:
  std::vector<ArcId> ids_;
};

// ---------------------------------------------------------------------------
// Negative cycles and potentials

/// Length-minimal negative cycle of `g` minus the masked arcs. Among equally
/// short negative cycles, returns the lexicographically smallest arc id
/// sequence (after rotation to the minimum arc id).
std::optional<Cycle> shortest_negative_cycle(const WeightedDigraph& g);
std::optional<Cycle> shortest_negative_cycle(const WeightedDigraph& g, const ArcMask& deleted);

/// Length of a shortest negative cycle via repeated min-plus squaring of the
/// weight matrix. Independent of the recovery path above.
std::optional<int> negative_cycle_min_length(const WeightedDigraph& g, const ArcMask& deleted);

/// Floyd-Warshall existence check.
bool has_negative_cycle_floyd_warshall(const WeightedDigraph& g, const ArcMask& deleted);

/// Shortest-path potential from a virtual source joined to every vertex by a
/// weight-0 arc. Absent iff a negative cycle exists. All values are <= 0.
std::optional<Potential> build_feasible_potential(const WeightedDigraph& g);
std::optional<Potential> build_feasible_potential(const WeightedDigraph& g, const ArcMask& deleted);

bool is_feasible_potential(const WeightedDigraph& g, const ArcMask& deleted, const Potential& pi);

struct VerifyReport {
  bool size_ok = false;
  bool acyclic_of_negatives = false;
  std::optional<Potential> certificate;
  bool valid() const { return size_ok && acyclic_of_negatives; }
};

/// Checks |s| <= k and that g - s has no negative cycle. Unknown arc ids in
/// `s` raise InputError.
VerifyReport verify_solution(const WeightedDigraph& g, const DeletionSet& s, int k);

/// Strongly connected components, each sorted, components ordered by their
/// minimum vertex.
std::vector<std::vector<Vertex>> strong_components(const WeightedDigraph& g);
std::vector<std::vector<Vertex>> strong_components(const WeightedDigraph& g, const ArcMask& deleted);

/// Vertices reachable from `sources` (sources included) along undeleted arcs.
std::vector<bool> reachable_from(const WeightedDigraph& g, const ArcMask& deleted, std::span<const Vertex> sources);

}  // namespace ndfas
