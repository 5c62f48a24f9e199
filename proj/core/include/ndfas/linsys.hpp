#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ndfas/graph.hpp"

namespace ndfas {

/// One difference constraint x[pos_var] - x[neg_var] <= rhs.
struct ConstraintRow {
  int row_id = 0;
  int pos_var = 0;
  int neg_var = 0;
  Weight rhs = 0;

  friend bool operator==(const ConstraintRow&, const ConstraintRow&) = default;
};

struct ConstraintSystem {
  std::vector<std::string> variable_names;
  std::vector<ConstraintRow> rows;
  int budget = 0;
};

/// Parses the JSON system format. Accepted constraint shapes:
///   {"pos": x, "neg": y, "rhs": b}                          x - y <= b
///   {"lhs_pos": x, "lhs_neg": y, "op": "<="|">="|"=", "rhs": b}
///   {"terms": {x: c, ...}, "op": ..., "rhs": b}             general row, must
///                                                           reduce to one +1 and one -1
/// `>=` rows are negated and `=` rows split into two `<=` rows, so row ids
/// need not match constraint indices.
ConstraintSystem parse_system(std::string_view text);
ConstraintSystem parse_system_json(const nlohmann::json& doc);

/// Row i becomes arc i = (pos_var, neg_var) with weight rhs.
WeightedDigraph system_to_digraph(const ConstraintSystem& sys);

/// Inverse transcription; variables are named v1..vn.
ConstraintSystem digraph_to_system(const WeightedDigraph& g, int budget = 0);

/// Arc ids back to row indices (the map is the identity on indices; arcs
/// outside [0, row_count) are rejected).
std::vector<int> blocker_from_arcs(const DeletionSet& s, int row_count);

}  // namespace ndfas
