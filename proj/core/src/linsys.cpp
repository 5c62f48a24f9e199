#include "ndfas/linsys.hpp"

#include <map>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace ndfas {

namespace {

using nlohmann::json;

[[noreturn]] void row_error(std::size_t index, const std::string& msg) {
  throw InputError("constraint " + std::to_string(index) + ": " + msg);
}

Weight integer_field(const json& c, const char* key, std::size_t index) {
  if (!c.contains(key)) row_error(index, std::string("missing '") + key + "'");
  const json& v = c.at(key);
  if (!v.is_number_integer()) row_error(index, std::string("'") + key + "' must be an integer");
  return v.get<Weight>();
}

int variable_index(const std::unordered_map<std::string, int>& index_of, const json& c, const char* key,
                   std::size_t index) {
  if (!c.contains(key) || !c.at(key).is_string()) row_error(index, std::string("missing variable '") + key + "'");
  const auto name = c.at(key).get<std::string>();
  auto it = index_of.find(name);
  if (it == index_of.end()) row_error(index, "unknown variable '" + name + "'");
  return it->second;
}

}  // namespace

ConstraintSystem parse_system(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_system_json(doc);
}

ConstraintSystem parse_system_json(const json& doc) {
  if (!doc.is_object()) throw InputError("system must be a JSON object");
  ConstraintSystem sys;
  std::unordered_map<std::string, int> index_of;
  if (!doc.contains("variables") || !doc.at("variables").is_array()) throw InputError("missing 'variables' array");
  for (const json& v : doc.at("variables")) {
    if (!v.is_string()) throw InputError("variable names must be strings");
    auto name = v.get<std::string>();
    if (!index_of.emplace(name, static_cast<int>(sys.variable_names.size())).second)
      throw InputError("duplicate variable '" + name + "'");
    sys.variable_names.push_back(std::move(name));
  }
  if (doc.contains("k")) {
    if (!doc.at("k").is_number_integer() || doc.at("k").get<long long>() < 0)
      throw InputError("'k' must be a non-negative integer");
    sys.budget = doc.at("k").get<int>();
  }
  if (!doc.contains("constraints") || !doc.at("constraints").is_array())
    throw InputError("missing 'constraints' array");

  auto push_row = [&](int pos, int neg, Weight rhs) {
    sys.rows.push_back(ConstraintRow{static_cast<int>(sys.rows.size()), pos, neg, rhs});
  };

  const json& constraints = doc.at("constraints");
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const json& c = constraints[i];
    if (!c.is_object()) row_error(i, "must be an object");
    int pos = -1, neg = -1;
    std::string op = "<=";
    if (c.contains("pos") || c.contains("neg")) {
      pos = variable_index(index_of, c, "pos", i);
      neg = variable_index(index_of, c, "neg", i);
    } else if (c.contains("lhs_pos") || c.contains("lhs_neg")) {
      pos = variable_index(index_of, c, "lhs_pos", i);
      neg = variable_index(index_of, c, "lhs_neg", i);
    } else if (c.contains("terms")) {
      const json& terms = c.at("terms");
      if (!terms.is_object()) row_error(i, "'terms' must map variable names to coefficients");
      int nonzero = 0;
      for (const auto& [name, coef] : terms.items()) {
        auto it = index_of.find(name);
        if (it == index_of.end()) row_error(i, "unknown variable '" + name + "'");
        if (!coef.is_number_integer()) row_error(i, "coefficient of '" + name + "' must be +1 or -1");
        const auto value = coef.get<long long>();
        if (value == 0) continue;
        ++nonzero;
        if (value == 1) {
          pos = it->second;
        } else if (value == -1) {
          neg = it->second;
        } else {
          row_error(i, "coefficient of '" + name + "' must be +1 or -1");
        }
      }
      if (nonzero != 2 || pos < 0 || neg < 0)
        row_error(i, "a difference constraint needs exactly one +1 and one -1 coefficient");
    } else {
      row_error(i, "expected 'pos'/'neg', 'lhs_pos'/'lhs_neg' or 'terms'");
    }
    if (c.contains("op")) {
      if (!c.at("op").is_string()) row_error(i, "'op' must be a string");
      op = c.at("op").get<std::string>();
    }
    const Weight rhs = integer_field(c, "rhs", i);
    if (pos == neg) row_error(i, "variable '" + sys.variable_names[static_cast<std::size_t>(pos)] + "' appears twice");

    if (op == "<=") {
      push_row(pos, neg, rhs);
    } else if (op == ">=") {
      push_row(neg, pos, -rhs);
    } else if (op == "=" || op == "==") {
      push_row(pos, neg, rhs);
      push_row(neg, pos, -rhs);
    } else {
      row_error(i, "unknown operator '" + op + "'");
    }
  }
  return sys;
}

WeightedDigraph system_to_digraph(const ConstraintSystem& sys) {
  WeightedDigraph g(static_cast<int>(sys.variable_names.size()));
  for (const ConstraintRow& r : sys.rows) {
    if (r.pos_var == r.neg_var) throw InputError("row " + std::to_string(r.row_id) + " has pos = neg");
    g.add_arc(r.pos_var, r.neg_var, r.rhs);
  }
  return g;
}

ConstraintSystem digraph_to_system(const WeightedDigraph& g, int budget) {
  ConstraintSystem sys;
  sys.budget = budget;
  for (int v = 0; v < g.vertex_count(); ++v) sys.variable_names.push_back("v" + std::to_string(v + 1));
  for (const Arc& a : g.arcs()) sys.rows.push_back(ConstraintRow{a.id, a.tail, a.head, a.weight});
  return sys;
}

std::vector<int> blocker_from_arcs(const DeletionSet& s, int row_count) {
  std::vector<int> rows;
  rows.reserve(s.size());
  for (ArcId a : s.arc_ids()) {
    if (a < 0 || a >= row_count) throw InputError("arc " + std::to_string(a) + " has no constraint row");
    rows.push_back(a);
  }
  return rows;
}

}  // namespace ndfas
