#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ndfas/graph.hpp"

namespace ndfas {

/// Names accepted as hints: trivial, td-branching, skew-nonzero, pm1-wminus,
/// pm1-wplus, dp-tw-wminus, dp-tw-wplus, dp-td, oracle.
const std::vector<std::string>& algorithm_names();

struct PortfolioOptions {
  std::optional<std::string> hint;
  int threads = 1;
  /// Report a minimum solution (iterative deepening over the budget).
  bool minimum = false;
  /// Largest estimated number of branch leaves or table entries a solver may use.
  double resource_cap = 1e8;
};

struct CostEstimate {
  std::string algorithm;
  bool applicable = false;
  double cost = 0;
  std::string note;
};

struct SolveResult {
  bool solved = false;
  std::optional<DeletionSet> set;
  std::string algorithm;
  /// True when the reported set is known to have minimum size.
  bool optimal = false;
  std::vector<CostEstimate> estimates;
};

/// Pre-run cost estimates for every solver on (g, k).
std::vector<CostEstimate> estimate_costs(const WeightedDigraph& g, int k);

/// Chooses a solver (or runs the hinted one) and verifies the answer. Throws
/// InputError for unknown hints or unmet preconditions and ResourceError when
/// nothing fits under the cap.
SolveResult solve_portfolio(const WeightedDigraph& g, int k, const PortfolioOptions& opts = {});

nlohmann::json estimates_to_json(const std::vector<CostEstimate>& estimates);

}  // namespace ndfas
