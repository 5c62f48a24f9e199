#include <doctest.h>

#include "ndfas/oracle.hpp"
#include "support.hpp"

using namespace ndfas;
using namespace ndfas::testing;

TEST_CASE("brute force ndfas examples") {
  CHECK(size_of(brute_force_ndfas(triangle(), 1)) == 1u);
  CHECK_FALSE(brute_force_ndfas(triangle(), 0));
  const auto zero = brute_force_ndfas(make_graph(2, {{0, 1, 1}, {1, 0, -1}}), 0);
  REQUIRE(zero);
  CHECK(zero->empty());
}

TEST_CASE("brute force returns a minimum set") {
  CHECK(size_of(brute_force_ndfas(two_disjoint_triangles(), 3)) == 2u);
}

TEST_CASE("subset enumeration order") {
  std::vector<std::vector<ArcId>> seen;
  for_each_subset({0, 1, 2}, 2, [&](const std::vector<ArcId>& s) {
    seen.push_back(s);
    return false;
  });
  CHECK(seen == std::vector<std::vector<ArcId>>{{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}});
  CHECK(subset_count(3, 2) == doctest::Approx(7));
}

TEST_CASE("brute force skew cut") {
  const auto one = make_graph(2, {{0, 1, 0}});
  const auto s1 = brute_force_skew_cut(one, {{0}}, {{1}}, 1);
  REQUIRE(s1);
  CHECK(*s1 == DeletionSet({0}));

  // a=0, b=1, c=2, d=3; arcs a->b, c->b, c->d, a->d
  const auto g = make_graph(4, {{0, 1, 0}, {2, 1, 0}, {2, 3, 0}, {0, 3, 0}});
  CHECK_FALSE(brute_force_skew_cut(g, {{0}, {2}}, {{1}, {3}}, 2));
  const auto s3 = brute_force_skew_cut(g, {{0}, {2}}, {{1}, {3}}, 3);
  REQUIRE(s3);
  CHECK(*s3 == DeletionSet({0, 1, 2}));
  CHECK_THROWS_AS(brute_force_skew_cut(g, {{0}}, {{0}}, 1), InputError);
}

TEST_CASE("brute force subset dfas") {
  const auto t = brute_force_subset_dfas(triangle(), {1}, 1);
  REQUIRE(t);
  CHECK(t->size() == 1);
  const auto none = brute_force_subset_dfas(triangle(), {}, 0);
  REQUIRE(none);
  CHECK(none->empty());
  CHECK_FALSE(brute_force_subset_dfas(two_disjoint_triangles(), {0, 3}, 1));
}

TEST_CASE("brute force fas and bedc") {
  const auto bidirected = make_graph(3, {{0, 1, 0}, {1, 0, 0}, {1, 2, 0}, {2, 1, 0}, {0, 2, 0}, {2, 0, 0}});
  CHECK(size_of(brute_force_fas(bidirected, 3)) == 3u);
  CHECK_FALSE(brute_force_fas(bidirected, 2));
  // s=0, t=2: direct arc plus a path of length 2
  const auto dag = make_graph(3, {{0, 2, 0}, {0, 1, 0}, {1, 2, 0}});
  CHECK(brute_force_bedc(dag, 0, 2, 1, 1) == std::optional<DeletionSet>(DeletionSet({0})));
  CHECK_FALSE(brute_force_bedc(dag, 0, 2, 0, 1));
  CHECK(size_of(brute_force_bedc(dag, 0, 2, 0, 0)) == 0u);
}

TEST_CASE("simple cycle enumeration") {
  CHECK(enumerate_simple_cycles(triangle()).size() == 1);
  const auto bidirected = make_graph(3, {{0, 1, 0}, {1, 0, 0}, {1, 2, 0}, {2, 1, 0}, {0, 2, 0}, {2, 0, 0}});
  // three 2-cycles and two triangles
  CHECK(enumerate_simple_cycles(bidirected).size() == 5);
  CHECK(enumerate_simple_cycles(make_graph(2, {{0, 1, 0}, {1, 0, 0}, {1, 0, 0}})).size() == 2);
}
