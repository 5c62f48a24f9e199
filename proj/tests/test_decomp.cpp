#include <doctest.h>

#include <random>

#include "ndfas/decomp.hpp"
#include "ndfas/generators.hpp"
#include "support.hpp"

using namespace ndfas;
using namespace ndfas::testing;

namespace {

WeightedDigraph clique(int n) {
  WeightedDigraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_arc(u, v, 0);
  }
  return g;
}

WeightedDigraph cycle(int n) {
  WeightedDigraph g(n);
  for (int v = 0; v < n; ++v) g.add_arc(v, (v + 1) % n, 0);
  return g;
}

WeightedDigraph path(int n) {
  WeightedDigraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_arc(v, v + 1, 0);
  return g;
}

}  // namespace

TEST_CASE("treewidth of small families") {
  const auto tree = make_graph(6, {{0, 1, 0}, {0, 2, 0}, {1, 3, 0}, {1, 4, 0}, {2, 5, 0}});
  auto td = compute_tree_decomposition(tree);
  CHECK(td.width() == 1);
  CHECK(validate_decomposition(tree, td).ok);
  CHECK(compute_tree_decomposition(clique(4)).width() == 3);
  CHECK(compute_tree_decomposition(cycle(5)).width() == 2);
}

TEST_CASE("decomposition validator catches defects") {
  const auto g = cycle(3);
  TreeDecomposition missing_edge{{{0, 1}, {1, 2}}, {{0, 1}}};
  CHECK_FALSE(validate_decomposition(g, missing_edge).ok);
  TreeDecomposition broken_trace{{{0, 1, 2}, {1}, {0}}, {{0, 1}, {1, 2}}};
  CHECK_FALSE(validate_decomposition(g, broken_trace).ok);
  TreeDecomposition fine{{{0, 1, 2}}, {}};
  CHECK(validate_decomposition(g, fine).ok);
}

TEST_CASE("nice form of a single K3 bag") {
  const auto g = clique(3);
  TreeDecomposition td{{{0, 1, 2}}, {}};
  const auto nice = make_nice(g, td);
  CHECK(validate_decomposition(g, nice).ok);
  CHECK(nice.width() == 2);
  int introduces = 0, forgets = 0, leaves = 0;
  for (const auto& node : nice.nodes) {
    introduces += node.kind == NiceKind::Introduce;
    forgets += node.kind == NiceKind::Forget;
    leaves += node.kind == NiceKind::Leaf;
  }
  CHECK(introduces == 3);
  CHECK(forgets == 3);
  CHECK(leaves == 1);
  CHECK(nice.nodes[static_cast<std::size_t>(nice.root)].bag.empty());
}

TEST_CASE("nice form of a path decomposition of P3") {
  const auto g = path(3);
  TreeDecomposition td{{{0, 1}, {1, 2}}, {{0, 1}}};
  const auto nice = make_nice(g, td);
  CHECK(validate_decomposition(g, nice).ok);
  CHECK(nice.width() == 1);
}

TEST_CASE("nice form keeps the width on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 7;
    const auto g = random_digraph(n, n + trial % 6, -1, 1, rng);
    const auto td = compute_tree_decomposition(g);
    REQUIRE(validate_decomposition(g, td).ok);
    const auto nice = make_nice(g, td);
    const auto check = validate_decomposition(g, nice);
    CHECK_MESSAGE(check.ok, check.reason);
    CHECK(nice.width() == td.width());
    for (const auto& node : nice.nodes) {
      if (node.kind == NiceKind::Join) CHECK(node.children.size() == 2);
    }
  }
}

TEST_CASE("treedepth of small families") {
  CHECK(compute_treedepth(WeightedDigraph(1)).depth == 1);
  CHECK(compute_treedepth(clique(3)).depth == 3);
  CHECK(compute_treedepth(path(3)).depth == 2);
  CHECK(compute_treedepth(path(7)).depth == 3);
  CHECK(compute_treedepth(WeightedDigraph(0)).depth == 0);
  const auto forest = compute_treedepth(cycle(6));
  CHECK(forest.exact);
  CHECK(validate_decomposition(cycle(6), forest).ok);
}

TEST_CASE("PACE export") {
  TreeDecomposition td{{{0, 1}, {1, 2}}, {{0, 1}}};
  CHECK(to_pace(td, 3) == "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
}
