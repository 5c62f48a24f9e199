#include <doctest.h>

#include <random>

#include "ndfas/branching.hpp"
#include "ndfas/generators.hpp"
#include "ndfas/oracle.hpp"
#include "ndfas/pm_one.hpp"
#include "support.hpp"

using namespace ndfas;
using namespace ndfas::testing;

TEST_CASE("non-negative cycle through an arc") {
  const auto zero = make_graph(2, {{0, 1, 1}, {1, 0, -1}});
  CHECK(nonneg_cycle_through_arc(zero, 0));
  CHECK(nonneg_cycle_through_arc(zero, 1));
  const auto open = make_graph(3, {{0, 1, 1}, {1, 2, -1}, {2, 1, 1}});
  CHECK_FALSE(nonneg_cycle_through_arc(open, 0));
  const auto negative = make_graph(2, {{0, 1, -1}, {1, 0, -1}});
  CHECK_FALSE(nonneg_cycle_through_arc(negative, 0));
  CHECK_FALSE(nonneg_cycle_through_arc(negative, 1));
}

TEST_CASE("color coding agrees with exhaustive search") {
  std::mt19937_64 rng(2);
  NonnegCycleOptions cc;
  cc.color_coding = true;
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_digraph(5, 8, -1, 1, rng);
    if (!g.weights_pm_one() || g.w_plus() > 2) continue;
    for (ArcId a = 0; a < g.arc_count(); ++a) CHECK(nonneg_cycle_through_arc(g, a) == nonneg_cycle_through_arc(g, a, cc));
  }
}

TEST_CASE("subset dfas") {
  CHECK(size_of(solve_subset_dfas(triangle(), {0}, 1)) == 1u);
  const auto none = solve_subset_dfas(two_disjoint_triangles(), {}, 0);
  REQUIRE(none);
  CHECK(none->empty());
  CHECK_FALSE(solve_subset_dfas(two_disjoint_triangles(), {0, 4}, 1));
}

TEST_CASE("subset dfas matches the oracle") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_digraph(5, 9, 0, 0, rng);
    std::vector<ArcId> u;
    for (ArcId a = 0; a < g.arc_count(); ++a) {
      if ((a + trial) % 3 == 0) u.push_back(a);
    }
    const int k = trial % 3;
    CHECK(size_of(solve_subset_dfas(g, u, k)) == size_of(brute_force_subset_dfas(g, u, k)));
  }
}

TEST_CASE("pm1 few positive examples") {
  CHECK(size_of(solve_pm1_few_positive(make_graph(2, {{0, 1, -1}, {1, 0, -1}}), 1)) == 1u);
  const auto free = make_graph(3, {{0, 1, -1}, {1, 2, 1}, {2, 0, 1}});
  const auto s = solve_pm1_few_positive(free, 0);
  REQUIRE(s);
  CHECK(s->empty());
  CHECK(pm1_short_cycle_bound(2) == 12);
  CHECK_THROWS_AS(solve_pm1_few_positive(make_graph(2, {{0, 1, 0}, {1, 0, -1}}), 1), InputError);
}

TEST_CASE("pm1 few positive matches the oracle") {
  std::mt19937_64 rng(31);
  int checked = 0;
  std::bernoulli_distribution coin(0.3);
  while (checked < 120) {
    const int n = 3 + checked % 5;
    WeightedDigraph g = random_digraph(n, n + 4, -1, -1, rng);
    WeightedDigraph h(n);
    int plus = 0;
    for (const Arc& a : g.arcs()) {
      const bool up = plus < 3 && coin(rng);
      plus += up;
      h.add_arc(a.tail, a.head, up ? 1 : -1);
    }
    ++checked;
    const int k = checked % 3;
    PmOneStats stats;
    const auto got = solve_minimum([&](int b) { return solve_pm1_few_positive(h, b, {}, &stats); }, k);
    CHECK(size_of(got) == size_of(brute_force_ndfas(h, k)));
  }
}
