#include <doctest.h>

#include <random>

#include "ndfas/generators.hpp"
#include "ndfas/oracle.hpp"
#include "ndfas/portfolio.hpp"
#include "support.hpp"

using namespace ndfas;
using namespace ndfas::testing;

TEST_CASE("triangle through the portfolio") {
  const auto r = solve_portfolio(triangle(), 1);
  CHECK(r.solved);
  REQUIRE(r.set);
  CHECK(r.set->size() == 1);
  CHECK_FALSE(r.algorithm.empty());
}

TEST_CASE("unit weights route to a DP") {
  const auto g = make_graph(4, {{0, 1, -1}, {1, 2, 0}, {2, 0, -1}, {2, 3, -1}, {3, 0, 1}});
  const auto r = solve_portfolio(g, 1);
  CHECK((r.algorithm == "dp-tw-wminus" || r.algorithm == "dp-tw-wplus" || r.algorithm == "dp-td"));
  CHECK(r.optimal);
}

TEST_CASE("hints enforce preconditions") {
  PortfolioOptions opts;
  opts.hint = "pm1-wplus";
  CHECK_THROWS_AS(solve_portfolio(make_graph(2, {{0, 1, 0}, {1, 0, -1}}), 1, opts), InputError);
  opts.hint = "no-such-solver";
  CHECK_THROWS_AS(solve_portfolio(triangle(), 1, opts), InputError);
  opts.hint = "trivial";
  CHECK_THROWS_AS(solve_portfolio(triangle(), 1, opts), InputError);
}

TEST_CASE("resource cap refusal lists estimates") {
  PortfolioOptions opts;
  opts.resource_cap = 0.5;
  opts.minimum = true;
  try {
    solve_portfolio(triangle(3), 1, opts);
    FAIL("expected a resource error");
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find("oracle=") != std::string::npos);
  }
}

TEST_CASE("every hinted solver agrees in minimum mode") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_digraph(5, 7, -1, 1, rng);
    const int k = trial % 3;
    const auto want = size_of(brute_force_ndfas(g, k));
    for (const auto& name : algorithm_names()) {
      PortfolioOptions opts;
      opts.hint = name;
      opts.minimum = true;
      SolveResult r;
      try {
        r = solve_portfolio(g, k, opts);
      } catch (const InputError&) {
        continue;  // precondition not met
      }
      INFO(name);
      CHECK(r.solved == want.has_value());
      if (r.solved && r.optimal) CHECK(r.set->size() == *want);
    }
  }
}

TEST_CASE("estimates cover every solver") {
  const auto est = estimate_costs(triangle(), 1);
  CHECK(est.size() == algorithm_names().size());
  CHECK(estimates_to_json(est).size() == est.size());
}
