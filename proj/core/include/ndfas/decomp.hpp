#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ndfas/graph.hpp"

namespace ndfas {

/// Simple undirected graph as sorted adjacency lists.
using UndirectedGraph = std::vector<std::vector<Vertex>>;

/// Underlying simple undirected graph (directions, weights, parallel and
/// antiparallel duplicates dropped).
UndirectedGraph underlying_undirected(const WeightedDigraph& g);

struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;  // each sorted
  std::vector<std::pair<int, int>> edges;

  int width() const;
};

enum class NiceKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
  NiceKind kind = NiceKind::Leaf;
  Vertex vertex = -1;  // introduced or forgotten vertex
  std::vector<Vertex> bag;
  std::vector<int> children;
};

/// Rooted nice decomposition. Children always precede their parent, so a
/// forward pass over `nodes` is a valid bottom-up order.
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;

  int width() const;
  TreeDecomposition as_tree_decomposition() const;
};

struct TreedepthDecomposition {
  std::vector<Vertex> parent;  // -1 for roots
  int depth = 0;
  bool exact = true;
};

struct DecompositionCheck {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Elimination-ordering decomposition. Orders come from an exact subset DP
/// when n <= exact_cap, otherwise from the min-fill heuristic.
TreeDecomposition compute_tree_decomposition(const WeightedDigraph& g, int exact_cap = 14);
TreeDecomposition decomposition_from_ordering(const UndirectedGraph& h, const std::vector<Vertex>& order);
std::vector<Vertex> min_fill_ordering(const UndirectedGraph& h);

NiceTreeDecomposition make_nice(const WeightedDigraph& g, const TreeDecomposition& td);

/// Exact treedepth for n <= exact_cap, heuristic upper bound otherwise.
TreedepthDecomposition compute_treedepth(const WeightedDigraph& g, int exact_cap = 20);

DecompositionCheck validate_decomposition(const WeightedDigraph& g, const TreeDecomposition& td);
DecompositionCheck validate_decomposition(const WeightedDigraph& g, const NiceTreeDecomposition& nice);
DecompositionCheck validate_decomposition(const WeightedDigraph& g, const TreedepthDecomposition& forest);

/// PACE-style text: `s td <bags> <width+1> <n>`, `b <id> <vertices>` lines and
/// tree edges, all 1-indexed.
std::string to_pace(const TreeDecomposition& td, int vertex_count);

}  // namespace ndfas
