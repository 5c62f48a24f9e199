#include <doctest.h>

#include "ndfas/linsys.hpp"
#include "support.hpp"

using namespace ndfas;
using namespace ndfas::testing;

TEST_CASE("single row system") {
  const auto sys = parse_system(R"({"variables":["x","y"],"constraints":[{"pos":"x","neg":"y","rhs":-1}],"k":0})");
  CHECK(sys.variable_names.size() == 2);
  REQUIRE(sys.rows.size() == 1);
  CHECK(sys.rows[0].pos_var == 0);
  CHECK(sys.rows[0].neg_var == 1);
  CHECK(sys.rows[0].rhs == -1);
  CHECK(sys.budget == 0);
}

TEST_CASE("a row with both sides on one variable is rejected") {
  CHECK_THROWS_AS(parse_system(R"({"variables":["x"],"constraints":[{"pos":"x","neg":"x","rhs":0}]})"), InputError);
}

TEST_CASE("infeasible pair becomes a negative 2-cycle") {
  const auto sys = parse_system(R"({"variables":["x","y"],"constraints":[
      {"pos":"x","neg":"y","rhs":-1},{"lhs_pos":"y","lhs_neg":"x","op":"<=","rhs":-1}],"k":1})");
  CHECK(sys.rows.size() == 2);
  CHECK(sys.budget == 1);
  const auto g = system_to_digraph(sys);
  REQUIRE(g.arc_count() == 2);
  CHECK(g.arc(0).tail == 0);
  CHECK(g.arc(0).head == 1);
  CHECK(g.arc(0).weight == -1);
  const auto c = shortest_negative_cycle(g);
  REQUIRE(c);
  CHECK(c->weight == -2);
}

TEST_CASE("operators and term rows") {
  const auto sys = parse_system(R"({"variables":["a","b"],"constraints":[
      {"lhs_pos":"a","lhs_neg":"b","op":">=","rhs":2},
      {"lhs_pos":"a","lhs_neg":"b","op":"=","rhs":3},
      {"terms":{"a":-1,"b":1},"op":"<=","rhs":4}]})");
  REQUIRE(sys.rows.size() == 4);
  // a - b >= 2  is  b - a <= -2
  CHECK(sys.rows[0].pos_var == 1);
  CHECK(sys.rows[0].rhs == -2);
  CHECK(sys.rows[1].rhs == 3);
  CHECK(sys.rows[2].rhs == -3);
  CHECK(sys.rows[3].pos_var == 1);
  CHECK(sys.rows[3].rhs == 4);
}

TEST_CASE("malformed systems") {
  CHECK_THROWS_AS(parse_system("{"), InputError);
  CHECK_THROWS_AS(parse_system(R"({"constraints":[]})"), InputError);
  CHECK_THROWS_AS(parse_system(R"({"variables":["x","y"],"constraints":[{"pos":"x","neg":"z","rhs":0}]})"), InputError);
  CHECK_THROWS_AS(parse_system(R"({"variables":["x","y"],"constraints":[],"k":-1})"), InputError);
  CHECK_THROWS_AS(parse_system(R"({"variables":["x","y"],"constraints":[{"terms":{"x":2,"y":-1},"rhs":0}]})"),
                  InputError);
}

TEST_CASE("empty system") {
  const auto sys = parse_system(R"({"variables":["x","y","z"],"constraints":[]})");
  const auto g = system_to_digraph(sys);
  CHECK(g.vertex_count() == 3);
  CHECK(g.arc_count() == 0);
}

TEST_CASE("digraph to system and back") {
  const auto sys = digraph_to_system(triangle(), 1);
  REQUIRE(sys.rows.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(sys.rows[static_cast<std::size_t>(i)].pos_var == i);
    CHECK(sys.rows[static_cast<std::size_t>(i)].neg_var == (i + 1) % 3);
    CHECK(sys.rows[static_cast<std::size_t>(i)].rhs == -1);
  }
  const auto again = digraph_to_system(system_to_digraph(sys), 1);
  CHECK(again.rows == sys.rows);

  const auto parallel = digraph_to_system(make_graph(2, {{0, 1, 2}, {0, 1, 2}}));
  CHECK(parallel.rows.size() == 2);
  CHECK(parallel.rows[0].rhs == parallel.rows[1].rhs);
}

TEST_CASE("blocker rows") {
  CHECK(blocker_from_arcs(DeletionSet({2, 0}), 3) == std::vector<int>{0, 2});
  CHECK_THROWS_AS(blocker_from_arcs(DeletionSet({3}), 3), InputError);
}
