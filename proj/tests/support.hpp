#pragma once

#include <initializer_list>
#include <optional>
#include <tuple>

#include "ndfas/graph.hpp"

namespace ndfas::testing {

using ArcSpec = std::tuple<Vertex, Vertex, Weight>;

inline WeightedDigraph make_graph(int n, std::initializer_list<ArcSpec> arcs) {
  WeightedDigraph g(n);
  for (auto [u, v, w] : arcs) g.add_arc(u, v, w);
  return g;
}

inline WeightedDigraph triangle(Weight w = -1) { return make_graph(3, {{0, 1, w}, {1, 2, w}, {2, 0, w}}); }

inline WeightedDigraph two_disjoint_triangles() {
  return make_graph(6, {{0, 1, -1}, {1, 2, -1}, {2, 0, -1}, {3, 4, -1}, {4, 5, -1}, {5, 3, -1}});
}

inline std::optional<std::size_t> size_of(const std::optional<DeletionSet>& s) {
  if (!s) return std::nullopt;
  return s->size();
}

}  // namespace ndfas::testing
