#include <doctest.h>

#include <random>

#include "ndfas/decomp.hpp"
#include "ndfas/dp.hpp"
#include "ndfas/generators.hpp"
#include "ndfas/oracle.hpp"
#include "support.hpp"

using namespace ndfas;
using namespace ndfas::testing;

namespace {

NiceTreeDecomposition nice_of(const WeightedDigraph& g) { return make_nice(g, compute_tree_decomposition(g)); }

}  // namespace

TEST_CASE("dp_solve examples") {
  const auto t = triangle();
  const auto r = dp_solve(t, nice_of(t), PartitionFamily::Singleton, 0, 3);
  CHECK(r.set.size() == 1);
  CHECK(is_cp_feasible(t, r.set, r.witness));

  const auto free = make_graph(3, {{0, 1, -1}, {1, 2, 0}, {2, 0, 1}});
  CHECK(dp_solve(free, nice_of(free), PartitionFamily::Singleton, 0, free.w_minus()).set.empty());

  const auto two = make_graph(2, {{0, 1, -1}, {1, 0, -1}});
  CHECK(dp_solve(two, nice_of(two), PartitionFamily::Singleton, 0, 2).set.size() == 1);
}

TEST_CASE("key counts") {
  CHECK(dp_key_count(2, PartitionFamily::Singleton, 0, 2) == doctest::Approx(9));
  CHECK(dp_key_count(2, PartitionFamily::AllOrderedPartitions, 0, 1) == doctest::Approx(3 * 4));
}

TEST_CASE("instantiation examples") {
  CHECK(size_of(solve_tw_wminus(triangle(), 1)) == 1u);
  CHECK_FALSE(solve_tw_wminus(triangle(), 0));

  const auto zero_sum = solve_tw_wplus(make_graph(2, {{0, 1, 1}, {1, 0, -1}}), 0);
  REQUIRE(zero_sum);
  CHECK(zero_sum->empty());
  CHECK(size_of(solve_tw_wplus(make_graph(2, {{0, 1, 0}, {1, 0, -1}}), 1)) == 1u);

  CHECK(size_of(solve_td_potential(triangle(), 1)) == 1u);
  const auto star = make_graph(5, {{0, 1, -1}, {0, 2, 0}, {0, 3, 1}, {4, 0, -1}});
  const auto empty = solve_td_potential(star, 0);
  REQUIRE(empty);
  CHECK(empty->empty());

  CHECK_THROWS_AS(solve_tw_wminus(make_graph(2, {{0, 1, 2}}), 0), InputError);
}

TEST_CASE("dp instantiations match the oracle") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_digraph(6, 6 + trial % 5, -1, 1, rng);
    const int k = trial % 4;
    const auto want = size_of(brute_force_ndfas(g, k));
    DpResult d1, d2, d3;
    CHECK(size_of(solve_tw_wminus(g, k, {}, &d1)) == want);
    CHECK(size_of(solve_tw_wplus(g, k, {}, &d2)) == want);
    CHECK(size_of(solve_td_potential(g, k, {}, &d3)) == want);
    CHECK(is_cp_feasible(g, d1.set, d1.witness));
    CHECK(is_cp_feasible(g, d2.set, d2.witness));
    CHECK(is_cp_feasible(g, d3.set, d3.witness));
  }
}

TEST_CASE("singleton witnesses are feasible potentials") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_digraph(6, 9, -1, 1, rng);
    DpResult d;
    solve_tw_wminus(g, 4, {}, &d);
    CHECK(d.witness.blocks == 1);
    CHECK(is_feasible_potential(g, d.set.to_mask(g.arc_count()), d.witness.potential));
  }
}

TEST_CASE("caps raise resource errors") {
  DpOptions tight;
  tight.key_budget = 4;
  CHECK_THROWS_AS(solve_tw_wminus(triangle(), 1, tight), ResourceError);
}
