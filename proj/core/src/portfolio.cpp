#include "ndfas/portfolio.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "ndfas/branching.hpp"
#include "ndfas/decomp.hpp"
#include "ndfas/dp.hpp"
#include "ndfas/oracle.hpp"
#include "ndfas/pm_one.hpp"
#include "ndfas/skew.hpp"

namespace ndfas {

namespace {

double power(double base, int exp) { return std::pow(std::max(base, 1.0), exp); }

int nonzero_endpoint_count(const WeightedDigraph& g) {
  std::set<Vertex> ends;
  for (const Arc& a : g.arcs()) {
    if (a.weight != 0) {
      ends.insert(a.tail);
      ends.insert(a.head);
    }
  }
  return static_cast<int>(ends.size());
}

CostEstimate* find(std::vector<CostEstimate>& all, const std::string& name) {
  for (auto& e : all) {
    if (e.algorithm == name) return &e;
  }
  return nullptr;
}

std::string describe(const std::vector<CostEstimate>& estimates, double cap) {
  std::ostringstream out;
  out << "no solver fits under the resource cap " << cap << ":";
  for (const auto& e : estimates) {
    out << " " << e.algorithm << "=";
    if (e.applicable) {
      out << e.cost;
    } else {
      out << "n/a";
    }
  }
  return out.str();
}

}  // namespace

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"trivial",   "td-branching", "skew-nonzero", "pm1-wminus", "pm1-wplus",
                                              "dp-tw-wminus", "dp-tw-wplus", "dp-td",       "oracle"};
  return names;
}

std::vector<CostEstimate> estimate_costs(const WeightedDigraph& g, int k) {
  const int wm = g.w_minus();
  const int wp = g.w_plus();
  const bool pm1 = g.weights_pm_one();
  const bool unit = g.weights_within(-1, 1);
  std::vector<CostEstimate> out;

  out.push_back({"trivial", wm <= k, 1, wm <= k ? "" : "needs w_- <= k"});

  const TreedepthDecomposition td = compute_treedepth(g);
  const int depth = td.depth;
  const double cycle_bound = depth <= 1 ? 1 : std::ldexp(1.0, depth - 1);
  out.push_back({"td-branching", true, power(cycle_bound, k), "treedepth " + std::to_string(depth)});

  const int endpoints = nonzero_endpoint_count(g);
  const int nonzero = wm + wp;
  if (endpoints <= NonzeroOptions{}.partition_cap) {
    const double cost = subset_count(nonzero, k) * ordered_bell(endpoints) * power(4.0, k);
    out.push_back({"skew-nonzero", true, cost, std::to_string(endpoints) + " non-zero endpoints"});
  } else {
    out.push_back({"skew-nonzero", false, 0, "too many non-zero endpoints"});
  }

  if (pm1) {
    out.push_back({"pm1-wminus", true, wm <= k ? 1 : power(2.0 * wm, k), ""});
    out.push_back({"pm1-wplus", true, power(pm1_short_cycle_bound(wp) + 1.0, k), ""});
  } else {
    out.push_back({"pm1-wminus", false, 0, "needs every weight in {-1,+1}"});
    out.push_back({"pm1-wplus", false, 0, "needs every weight in {-1,+1}"});
  }

  if (unit) {
    const int bag = compute_tree_decomposition(g).width() + 1;
    const double nodes = 4.0 * std::max(1, g.vertex_count());
    const DpOptions dp;
    auto add = [&](const char* name, PartitionFamily fam, Weight hi) {
      const double keys = dp_key_count(bag, fam, 0, hi);
      const bool fits = bag <= dp.bag_cap && keys <= dp.key_budget;
      out.push_back({name, fits, keys * nodes, fits ? "bag size " + std::to_string(bag) : "over the DP caps"});
    };
    add("dp-tw-wminus", PartitionFamily::Singleton, wm);
    add("dp-tw-wplus", PartitionFamily::AllOrderedPartitions, wp);
    add("dp-td", PartitionFamily::Singleton, static_cast<Weight>(std::ldexp(1.0, std::min(depth, 40))));
  } else {
    for (const char* name : {"dp-tw-wminus", "dp-tw-wplus", "dp-td"}) out.push_back({name, false, 0, "needs weights in {-1,0,1}"});
  }

  out.push_back({"oracle", true, subset_count(g.arc_count(), k), ""});
  return out;
}

SolveResult solve_portfolio(const WeightedDigraph& g, int k, const PortfolioOptions& opts) {
  if (k < 0) throw InputError("budget must be non-negative");
  SolveResult result;
  result.estimates = estimate_costs(g, k);
  BranchOptions branch;
  branch.threads = std::max(1, opts.threads);

  // Returns the set and whether it is minimum.
  auto run = [&](const std::string& name) -> std::pair<std::optional<DeletionSet>, bool> {
    auto wrapped = [&](const BudgetSolver& solve) -> std::pair<std::optional<DeletionSet>, bool> {
      if (opts.minimum) return {solve_minimum(solve, k), true};
      return {solve(k), false};
    };
    if (name == "trivial") {
      if (g.w_minus() > k) throw InputError("trivial needs w_- <= k");
      return {solve_trivial_few_negative(g, k), g.w_minus() == 0};
    }
    if (name == "td-branching") return wrapped([&](int b) { return solve_td_plus_k(g, b, branch); });
    if (name == "skew-nonzero") return wrapped([&](int b) { return solve_nonzero_count(g, b); });
    if (name == "pm1-wminus") {
      if (!g.weights_pm_one()) throw InputError("pm1-wminus needs every weight in {-1,+1}");
      return wrapped([&](int b) { return solve_pm1_few_negative(g, b, branch); });
    }
    if (name == "pm1-wplus") {
      if (!g.weights_pm_one()) throw InputError("pm1-wplus needs every weight in {-1,+1}");
      return wrapped([&](int b) { return solve_pm1_few_positive(g, b); });
    }
    if (name == "dp-tw-wminus") return {solve_tw_wminus(g, k), true};
    if (name == "dp-tw-wplus") return {solve_tw_wplus(g, k), true};
    if (name == "dp-td") return {solve_td_potential(g, k), true};
    if (name == "oracle") return {brute_force_ndfas(g, k), true};
    throw InputError("unknown algorithm '" + name + "'");
  };

  std::string chosen;
  if (opts.hint) {
    chosen = *opts.hint;
    if (std::find(algorithm_names().begin(), algorithm_names().end(), chosen) == algorithm_names().end())
      throw InputError("unknown algorithm '" + chosen + "'");
  } else {
    auto& est = result.estimates;
    auto fits = [&](const char* name) {
      const CostEstimate* e = find(est, name);
      return e && e->applicable && e->cost <= opts.resource_cap;
    };
    auto cost = [&](const char* name) { return find(est, name)->cost; };
    if (!opts.minimum && fits("trivial")) {
      chosen = "trivial";
    } else if (g.arc_count() > 0 && g.weights_pm_one() && (fits("pm1-wminus") || fits("pm1-wplus"))) {
      if (fits("pm1-wminus") && (!fits("pm1-wplus") || cost("pm1-wminus") <= cost("pm1-wplus"))) {
        chosen = "pm1-wminus";
      } else {
        chosen = "pm1-wplus";
      }
    } else if (g.weights_within(-1, 1) && (fits("dp-tw-wminus") || fits("dp-tw-wplus") || fits("dp-td"))) {
      for (const char* name : {"dp-tw-wminus", "dp-tw-wplus", "dp-td"}) {
        if (fits(name) && (chosen.empty() || cost(name) < cost(chosen.c_str()))) chosen = name;
      }
    } else if (fits("td-branching")) {
      chosen = "td-branching";
    } else if (fits("skew-nonzero")) {
      chosen = "skew-nonzero";
    } else if (fits("oracle")) {
      chosen = "oracle";
    } else {
      throw ResourceError(describe(est, opts.resource_cap), 0);
    }
  }

  auto [set, optimal] = run(chosen);
  result.algorithm = chosen;
  if (set) {
    if (!verify_solution(g, *set, k).valid())
      throw std::logic_error(chosen + " returned a set that fails verification");
    result.solved = true;
    result.set = std::move(set);
    result.optimal = optimal;
  }
  return result;
}

nlohmann::json estimates_to_json(const std::vector<CostEstimate>& estimates) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : estimates) {
    nlohmann::json item = {{"algorithm", e.algorithm}, {"applicable", e.applicable}};
    if (e.applicable) item["cost"] = e.cost;
    if (!e.note.empty()) item["note"] = e.note;
    out.push_back(item);
  }
  return out;
}

}  // namespace ndfas
