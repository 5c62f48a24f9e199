#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ndfas/decomp.hpp"
#include "ndfas/graph.hpp"

namespace ndfas {

/// A generated instance plus its sidecar metadata:
/// {"family", "params", "expected": "yes"|"no"|"unknown", "budget", "w_plus", "w_minus"}.
struct GeneratedInstance {
  WeightedDigraph graph;
  int budget = 0;
  nlohmann::json meta;
};

/// Same digraph, every weight -1. `expected` comes from an exhaustive
/// feedback arc set search when the graph is small.
GeneratedInstance gen_from_dfas(const WeightedDigraph& g, int k);

/// Partition gadget with budget n and a single positive arc (t, s) of weight
/// A/2. Odd totals are refused.
GeneratedInstance gen_partition_gadget(const std::vector<int>& numbers);

/// The explicit width-6 path decomposition of a partition gadget.
TreeDecomposition pathwidth_certificate_partition(const GeneratedInstance& inst);

/// Multicolored clique gadget with budget k + k(k-1)/2. `color[v]` is the
/// class of vertex v in [0, k). An empty class or an empty edge set between
/// two classes yields a canonical no-instance.
GeneratedInstance gen_multicolored_clique_gadget(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                                                 const std::vector<int>& color, int k);

struct Subdivision {
  WeightedDigraph graph;
  std::vector<ArcId> arc_back_map;  // new arc id -> original arc id
};

/// Each arc of weight w != 0 becomes a path of |w| arcs of weight sign(w).
Subdivision subdivide_to_unit_weights(const WeightedDigraph& g);

/// Bounded edge directed (s,t)-cut chain: original arcs get weight +1 and
/// k+1 connectors t -> s, each a path of ell+1 arcs of weight -1, are added.
GeneratedInstance gen_bedc_chain(const WeightedDigraph& dag, Vertex s, Vertex t, int k, int ell);

// Random families for tests and benchmarks.

/// Loopless random multigraph with weights uniform in [lo, hi].
WeightedDigraph random_digraph(int n, int m, Weight lo, Weight hi, std::mt19937_64& rng);

/// Random DAG on n vertices (arcs go from lower to higher index) with m arcs.
WeightedDigraph random_dag(int n, int m, std::mt19937_64& rng);

/// A hub vertex plus `triangles` directed triangles, each joined to the hub by
/// one arc. Treedepth at most 4.
WeightedDigraph gen_hub_triangles(int triangles, Weight lo, Weight hi, std::mt19937_64& rng);

/// Random partial k-tree on n vertices, each edge kept with probability
/// `keep` and oriented at random. Treewidth at most k.
WeightedDigraph gen_partial_ktree(int n, int k, double keep, Weight lo, Weight hi, std::mt19937_64& rng);

/// Writes `<stem>.ndfas`-style graph text to `path` and the sidecar next to it
/// with the extension replaced by `.meta.json`.
void write_instance(const GeneratedInstance& inst, const std::string& path);
std::string sidecar_path(const std::string& path);

}  // namespace ndfas
