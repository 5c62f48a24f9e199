// ndfas: solve, generate and verify Negative DFAS / MinFB instances.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ndfas/decomp.hpp"
#include "ndfas/generators.hpp"
#include "ndfas/graph.hpp"
#include "ndfas/io.hpp"
#include "ndfas/linsys.hpp"
#include "ndfas/portfolio.hpp"

using nlohmann::json;
using namespace ndfas;

namespace {

enum Exit { kSolved = 0, kNoSolution = 1, kInputError = 2, kResourceError = 3 };

struct LoadedInput {
  WeightedDigraph graph;
  std::optional<ConstraintSystem> system;
};

std::string detect_format(const std::string& path, const std::string& format) {
  if (!format.empty()) return format;
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) return "minfb-json";
  return "ndfas";
}

LoadedInput load(const std::string& path, const std::string& format) {
  const std::string fmt = detect_format(path, format);
  LoadedInput in;
  if (fmt == "ndfas") {
    in.graph = read_ndfas_file(path);
  } else if (fmt == "minfb-json") {
    json doc;
    try {
      doc = json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
      throw InputError(std::string("malformed JSON: ") + e.what());
    }
    in.system = parse_system_json(doc);
    in.graph = system_to_digraph(*in.system);
  } else {
    throw InputError("unknown format '" + fmt + "' (expected ndfas or minfb-json)");
  }
  return in;
}

std::vector<std::string> vertex_names(const LoadedInput& in) {
  if (in.system) return in.system->variable_names;
  std::vector<std::string> names;
  for (int v = 0; v < in.graph.vertex_count(); ++v) names.push_back("v" + std::to_string(v + 1));
  return names;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("not an integer: '" + item + "'");
    }
  }
  return out;
}

// "u-v,u-v" with 1-indexed vertices.
std::vector<std::pair<int, int>> parse_edge_list(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw InputError("edge '" + item + "' is not of the form u-v");
    const auto ends = parse_int_list(item.substr(0, dash) + "," + item.substr(dash + 1));
    if (ends.size() != 2) throw InputError("edge '" + item + "' is not of the form u-v");
    out.emplace_back(ends[0] - 1, ends[1] - 1);
  }
  return out;
}

int cmd_solve(const std::string& input, const std::string& format, std::optional<int> k_flag,
              const std::string& algorithm, int threads, bool deterministic, bool human, bool minimum, double cap) {
  const LoadedInput in = load(input, format);
  int k = 0;
  if (k_flag) {
    k = *k_flag;
  } else if (in.system) {
    k = in.system->budget;
  } else {
    throw InputError("--k is required for ndfas input");
  }
  PortfolioOptions opts;
  if (!algorithm.empty()) opts.hint = algorithm;
  opts.threads = deterministic ? 1 : threads;
  opts.minimum = minimum;
  opts.resource_cap = cap;
  const SolveResult r = solve_portfolio(in.graph, k, opts);

  json out;
  out["status"] = r.solved ? "solved" : "no_solution";
  out["algorithm"] = r.algorithm;
  out["k"] = k;
  if (r.solved) {
    const DeletionSet& s = *r.set;
    out["arc_ids"] = s.arc_ids();
    out["size"] = s.size();
    out["optimal"] = r.optimal;
    if (in.system) out["blocker_rows"] = blocker_from_arcs(s, static_cast<int>(in.system->rows.size()));
    const auto pot = build_feasible_potential(in.graph, s.to_mask(in.graph.arc_count()));
    json potential = json::object();
    const auto names = vertex_names(in);
    if (pot) {
      for (std::size_t v = 0; v < names.size(); ++v) potential[names[v]] = pot->values[v];
    }
    out["potential"] = potential;
  } else {
    out["blocker_rows"] = json::array();
    out["size"] = 0;
    out["potential"] = json::object();
  }

  if (human) {
    if (r.solved) {
      std::cout << "solved by " << r.algorithm << ": " << r.set->size() << " arc(s)"
                << (r.optimal ? " (minimum)" : "") << "\n";
      std::cout << "arcs:";
      for (ArcId a : r.set->arc_ids()) {
        const Arc& arc = in.graph.arc(a);
        std::cout << " " << a << "(" << arc.tail + 1 << "->" << arc.head + 1 << "," << arc.weight << ")";
      }
      std::cout << "\n";
      if (in.system) {
        std::cout << "rows:";
        for (int row : out["blocker_rows"].get<std::vector<int>>()) std::cout << " " << row;
        std::cout << "\n";
      }
    } else {
      std::cout << "no solution with at most " << k << " deletions (" << r.algorithm << ")\n";
    }
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return r.solved ? kSolved : kNoSolution;
}

int cmd_verify(const std::string& input, const std::string& format, const std::string& solution,
               std::optional<int> k_flag) {
  const LoadedInput in = load(input, format);
  json doc;
  try {
    doc = json::parse(read_text_file(solution));
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed solution JSON: ") + e.what());
  }
  std::vector<ArcId> ids;
  if (doc.contains("arc_ids")) {
    ids = doc.at("arc_ids").get<std::vector<ArcId>>();
  } else if (doc.contains("blocker_rows")) {
    ids = doc.at("blocker_rows").get<std::vector<ArcId>>();
  } else {
    throw InputError("solution needs \"arc_ids\" or \"blocker_rows\"");
  }
  for (ArcId a : ids) {
    if (a < 0 || a >= in.graph.arc_count()) throw InputError("solution arc " + std::to_string(a) + " out of range");
  }
  const DeletionSet s(ids);
  int k = static_cast<int>(s.size());
  if (k_flag) {
    k = *k_flag;
  } else if (in.system) {
    k = in.system->budget;
  }
  const VerifyReport rep = verify_solution(in.graph, s, k);
  json out = {{"valid", rep.valid()}, {"size", s.size()}, {"k", k}, {"size_ok", rep.size_ok},
              {"no_negative_cycle", rep.acyclic_of_negatives}};
  std::cout << out.dump(2) << "\n";
  return rep.valid() ? kSolved : kNoSolution;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum feasibility blockers of difference constraints via Negative DFAS"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  std::string input, format, algorithm;
  std::optional<int> k;
  int threads = 1;
  bool deterministic = false, human = false, json_out = false, minimum = false;
  double cap = 1e8;
  solve->add_option("--input", input, "Instance file")->required();
  solve->add_option("--format", format, "ndfas or minfb-json (default: by extension)")
      ->check(CLI::IsMember({"ndfas", "minfb-json"}));
  solve->add_option("--k", k, "Deletion budget (defaults to the MinFB \"k\")");
  solve->add_option("--algorithm", algorithm, "Force a solver")->check(CLI::IsMember(algorithm_names()));
  solve->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  solve->add_flag("--deterministic", deterministic, "Sequential, reproducible run");
  solve->add_flag("--minimum", minimum, "Report a minimum-size solution");
  solve->add_option("--cap", cap, "Resource cap on estimated leaves or table entries");
  auto* human_flag = solve->add_flag("--human", human, "Human-readable output");
  solve->add_flag("--json", json_out, "JSON output (default)")->excludes(human_flag);

  // verify
  auto* verify = app.add_subcommand("verify", "Check a solution");
  std::string solution;
  verify->add_option("--input", input, "Instance file")->required();
  verify->add_option("--format", format, "ndfas or minfb-json")->check(CLI::IsMember({"ndfas", "minfb-json"}));
  verify->add_option("--solution", solution, "Solution JSON")->required();
  verify->add_option("--k", k, "Budget to check against");

  // generate
  auto* generate = app.add_subcommand("generate", "Emit a generated instance and its .meta.json sidecar");
  generate->require_subcommand(1);
  std::string out_path, numbers, edges, colors, pace_out;
  int gk = 0, n = 0, m = 0, s = 1, t = 2, ell = 0;
  std::uint64_t seed = 1;
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", out_path, "Output graph file")->required(); };

  auto* g_dfas = generate->add_subcommand("dfas", "Feedback arc set instance, all weights -1");
  g_dfas->add_option("--input", input, "Digraph in ndfas format (weights ignored)");
  g_dfas->add_option("--n", n, "Random digraph: vertices");
  g_dfas->add_option("--m", m, "Random digraph: arcs");
  g_dfas->add_option("--seed", seed, "Random seed");
  g_dfas->add_option("--k", gk, "Budget")->required();
  add_out(g_dfas);

  auto* g_part = generate->add_subcommand("partition", "Partition gadget");
  g_part->add_option("--numbers", numbers, "Comma-separated positive integers")->required();
  g_part->add_option("--pace-out", pace_out, "Also write the width-6 path decomposition");
  add_out(g_part);

  auto* g_mcc = generate->add_subcommand("mcclique", "Multicolored clique gadget");
  g_mcc->add_option("--n", n, "Vertices")->required();
  g_mcc->add_option("--edges", edges, "Comma-separated u-v pairs, 1-indexed")->required();
  g_mcc->add_option("--colors", colors, "Class of each vertex, 0-indexed")->required();
  g_mcc->add_option("--k", gk, "Number of classes")->required();
  add_out(g_mcc);

  auto* g_bedc = generate->add_subcommand("bedc-chain", "Bounded edge directed cut chain");
  g_bedc->add_option("--input", input, "DAG in ndfas format (weights ignored)");
  g_bedc->add_option("--n", n, "Random DAG: vertices");
  g_bedc->add_option("--m", m, "Random DAG: arcs");
  g_bedc->add_option("--seed", seed, "Random seed");
  g_bedc->add_option("--s", s, "Source, 1-indexed");
  g_bedc->add_option("--t", t, "Sink, 1-indexed");
  g_bedc->add_option("--k", gk, "Budget")->required();
  g_bedc->add_option("--ell", ell, "Length bound")->required();
  add_out(g_bedc);

  auto* g_sub = generate->add_subcommand("subdivide", "Subdivide into unit weights");
  g_sub->add_option("--input", input, "Weighted digraph in ndfas format")->required();
  g_sub->add_option("--k", gk, "Budget recorded in the sidecar");
  add_out(g_sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*solve) return cmd_solve(input, format, k, algorithm, threads, deterministic, human, minimum, cap);
    if (*verify) return cmd_verify(input, format, solution, k);

    std::mt19937_64 rng(seed);
    auto source_graph = [&](bool dag) {
      if (!input.empty()) return read_ndfas_file(input);
      if (n <= 0) throw InputError("give --input or --n/--m");
      return dag ? random_dag(n, m, rng) : random_digraph(n, m, -1, -1, rng);
    };
    GeneratedInstance inst;
    if (*g_dfas) {
      inst = gen_from_dfas(source_graph(false), gk);
    } else if (*g_part) {
      inst = gen_partition_gadget(parse_int_list(numbers));
      if (!pace_out.empty()) {
        write_text_file(pace_out, to_pace(pathwidth_certificate_partition(inst), inst.graph.vertex_count()));
      }
    } else if (*g_mcc) {
      inst = gen_multicolored_clique_gadget(n, parse_edge_list(edges), parse_int_list(colors), gk);
    } else if (*g_bedc) {
      inst = gen_bedc_chain(source_graph(true), s - 1, t - 1, gk, ell);
    } else if (*g_sub) {
      const WeightedDigraph g = read_ndfas_file(input);
      Subdivision sub = subdivide_to_unit_weights(g);
      inst.graph = std::move(sub.graph);
      inst.budget = gk;
      inst.meta = {{"family", "subdivide"},
                   {"params", {{"source", input}, {"arc_back_map", sub.arc_back_map}}},
                   {"expected", "unknown"},
                   {"budget", gk},
                   {"w_plus", inst.graph.w_plus()},
                   {"w_minus", inst.graph.w_minus()}};
    }
    write_instance(inst, out_path);
    std::cout << json{{"out", out_path}, {"meta", sidecar_path(out_path)}, {"budget", inst.budget},
                      {"vertices", inst.graph.vertex_count()}, {"arcs", inst.graph.arc_count()},
                      {"expected", inst.meta.value("expected", "unknown")}}
                     .dump()
              << "\n";
    return 0;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kResourceError;
  } catch (const std::bad_alloc&) {
    std::cerr << "resource error: out of memory\n";
    return kResourceError;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
}
