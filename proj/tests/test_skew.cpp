#include <doctest.h>

#include <random>
#include <set>

#include "ndfas/branching.hpp"
#include "ndfas/generators.hpp"
#include "ndfas/oracle.hpp"
#include "ndfas/skew.hpp"
#include "support.hpp"

using namespace ndfas;
using namespace ndfas::testing;

TEST_CASE("zero propagation graph splits non-zero endpoints") {
  // u=0, v=1, x=2
  const auto g = make_graph(3, {{0, 1, 1}, {1, 2, 0}, {2, 0, 0}});
  const auto z = build_zero_propagation_graph(g);
  CHECK(z.graph.vertex_count() == 5);
  CHECK(z.split == std::vector<bool>{true, true, false});
  REQUIRE(z.graph.arc_count() == 2);
  CHECK(z.graph.arc(0).tail == z.plus_of[1]);
  CHECK(z.graph.arc(0).head == z.plus_of[2]);
  CHECK(z.graph.arc(1).tail == z.plus_of[2]);
  CHECK(z.graph.arc(1).head == z.minus_of[0]);
  CHECK(z.arc_back_map == std::vector<ArcId>{1, 2});
}

TEST_CASE("zero propagation graph edge cases") {
  const auto zeros = build_zero_propagation_graph(triangle(0));
  CHECK(zeros.graph.vertex_count() == 3);
  CHECK(zeros.graph.arc_count() == 3);
  const auto nonzero = build_zero_propagation_graph(triangle(-1));
  CHECK(nonzero.graph.vertex_count() == 6);
  CHECK(nonzero.graph.arc_count() == 0);
}

TEST_CASE("ordered partitions") {
  CHECK(enumerate_ordered_partitions(1).size() == 1);
  const auto two = enumerate_ordered_partitions(2);
  CHECK(two == std::vector<std::vector<std::vector<int>>>{{{0, 1}}, {{0}, {1}}, {{1}, {0}}});
  CHECK(enumerate_ordered_partitions(3).size() == 13);
  CHECK(ordered_bell(4) == doctest::Approx(75));
  CHECK(enumerate_ordered_partitions(0).size() == 1);
  CHECK_THROWS_AS(enumerate_ordered_partitions(11), ResourceError);
}

TEST_CASE("skew separator examples") {
  const SkewInstance one{make_graph(2, {{0, 1, 0}}), {{0}}, {{1}}, 1};
  CHECK(solve_skew_separator(one) == std::optional<DeletionSet>(DeletionSet({0})));

  const auto g = make_graph(4, {{0, 1, 0}, {2, 1, 0}, {2, 3, 0}, {0, 3, 0}});
  CHECK_FALSE(solve_skew_separator({g, {{0}, {2}}, {{1}, {3}}, 2}));
  CHECK(solve_skew_separator({g, {{0}, {2}}, {{1}, {3}}, 3}) == std::optional<DeletionSet>(DeletionSet({0, 1, 2})));

  const auto unreachable = solve_skew_separator({make_graph(2, {{1, 0, 0}}), {{0}}, {{1}}, 0});
  REQUIRE(unreachable);
  CHECK(unreachable->empty());

  // three arc-disjoint x -> y paths, budget 2
  const auto paths = make_graph(5, {{0, 1, 0}, {0, 2, 0}, {2, 1, 0}, {0, 3, 0}, {3, 4, 0}, {4, 1, 0}});
  CHECK_FALSE(solve_skew_separator({paths, {{0}}, {{1}}, 2}));
}

TEST_CASE("important cuts include a minimum cut") {
  const auto g = make_graph(4, {{0, 1, 0}, {1, 3, 0}, {0, 2, 0}, {2, 3, 0}});
  const auto cuts = important_cuts(g, g.empty_mask(), {0}, {3}, 2);
  REQUIRE_FALSE(cuts.empty());
  for (const auto& c : cuts) {
    CHECK_FALSE(reachable_from(g, c.to_mask(g.arc_count()), std::vector<Vertex>{0})[3]);
  }
  CHECK(important_cuts(g, g.empty_mask(), {0}, {3}, 1).empty());
}

TEST_CASE("skew separator matches the oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 4 + trial % 4;
    const auto g = random_digraph(n, n + 4, 0, 0, rng);
    const int p = 1 + trial % 3;
    std::vector<std::vector<Vertex>> xs(static_cast<std::size_t>(p)), ys(static_cast<std::size_t>(p));
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i < p && 2 * i + 1 < n; ++i) {
      xs[static_cast<std::size_t>(i)].push_back(perm[static_cast<std::size_t>(2 * i)]);
      ys[static_cast<std::size_t>(i)].push_back(perm[static_cast<std::size_t>(2 * i + 1)]);
    }
    const int k = trial % 4;
    const SkewInstance inst{g, xs, ys, k};
    const auto want = brute_force_skew_cut(g, xs, ys, k);
    const auto got = solve_skew_separator(inst);
    CHECK(want.has_value() == got.has_value());
  }
}

TEST_CASE("non-zero count examples") {
  CHECK(size_of(solve_nonzero_count(triangle(), 1)) == 1u);
  const auto two = make_graph(2, {{0, 1, 1}, {1, 0, -2}});
  const auto s = solve_nonzero_count(two, 1);
  REQUIRE(s);
  CHECK(s->size() == 1);
  const auto free = solve_nonzero_count(make_graph(3, {{0, 1, 2}, {1, 2, -1}, {2, 0, 0}}), 0);
  REQUIRE(free);
  CHECK(free->empty());
}

TEST_CASE("non-zero count matches the oracle") {
  std::mt19937_64 rng(29);
  int checked = 0;
  while (checked < 60) {
    const auto g = random_digraph(5, 7, -2, 2, rng);
    if (g.w_plus() + g.w_minus() > 4) continue;
    ++checked;
    for (int k = 0; k <= 2; ++k) {
      const auto want = brute_force_ndfas(g, k);
      const auto got = solve_minimum([&](int b) { return solve_nonzero_count(g, b); }, k);
      REQUIRE(want.has_value() == got.has_value());
      if (got) CHECK(got->size() == want->size());
    }
  }
}
