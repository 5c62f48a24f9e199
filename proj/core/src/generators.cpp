#include "ndfas/generators.hpp"

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <set>

#include "ndfas/io.hpp"
#include "ndfas/oracle.hpp"

namespace ndfas {

namespace {

constexpr int kOracleArcLimit = 16;

void finish_meta(GeneratedInstance& inst, const std::string& family, nlohmann::json params, const std::string& expected) {
  inst.meta = {{"family", family},
               {"params", std::move(params)},
               {"expected", expected},
               {"budget", inst.budget},
               {"w_plus", inst.graph.w_plus()},
               {"w_minus", inst.graph.w_minus()}};
}

bool is_dag(const WeightedDigraph& g) {
  for (const auto& comp : strong_components(g)) {
    if (comp.size() > 1) return false;
  }
  return true;
}

// d + 1 vertex-disjoint negative 2-cycles: needs d + 1 deletions.
WeightedDigraph canonical_no_instance(int d) {
  WeightedDigraph g(2 * (d + 1));
  for (int i = 0; i <= d; ++i) {
    g.add_arc(2 * i, 2 * i + 1, -1);
    g.add_arc(2 * i + 1, 2 * i, -1);
  }
  return g;
}

bool subset_sum_half(const std::vector<int>& numbers) {
  const int total = std::accumulate(numbers.begin(), numbers.end(), 0);
  if (total % 2 != 0) return false;
  std::vector<char> reach(static_cast<std::size_t>(total / 2) + 1, 0);
  reach[0] = 1;
  for (int a : numbers) {
    for (int s = total / 2; s >= a; --s) reach[static_cast<std::size_t>(s)] |= reach[static_cast<std::size_t>(s - a)];
  }
  return reach[static_cast<std::size_t>(total / 2)];
}

// Partition gadget vertex layout.
struct PartitionLayout {
  int n;
  static constexpr Vertex s = 0;
  static constexpr Vertex t = 1;
  Vertex layer(int i, int j) const { return 2 + 2 * i + (j - 1); }  // i = 0..n, j = 1, 2
  Vertex x(int i, int j) const { return 2 + 2 * (n + 1) + 4 * (i - 1) + 2 * (j - 1); }
  Vertex y(int i, int j) const { return x(i, j) + 1; }
  Vertex s_of(int i, int j) const { return layer(i - 1, j); }
  Vertex t_of(int i, int j) const { return layer(i, j); }
  int vertex_count() const { return 2 + 2 * (n + 1) + 4 * n; }
};

}  // namespace

GeneratedInstance gen_from_dfas(const WeightedDigraph& g, int k) {
  if (k < 0) throw InputError("budget must be non-negative");
  GeneratedInstance inst;
  inst.graph = WeightedDigraph(g.vertex_count());
  for (const Arc& a : g.arcs()) inst.graph.add_arc(a.tail, a.head, -1);
  inst.budget = k;
  std::string expected = "unknown";
  if (g.arc_count() <= kOracleArcLimit) expected = brute_force_fas(g, k) ? "yes" : "no";
  finish_meta(inst, "dfas", {{"n", g.vertex_count()}, {"m", g.arc_count()}, {"k", k}}, expected);
  return inst;
}

GeneratedInstance gen_partition_gadget(const std::vector<int>& numbers) {
  if (numbers.empty()) throw InputError("partition gadget needs at least one number");
  for (int a : numbers) {
    if (a < 1) throw InputError("partition numbers must be positive");
  }
  const int total = std::accumulate(numbers.begin(), numbers.end(), 0);
  if (total % 2 != 0) {
    throw InputError("partition gadget needs an even total (got " + std::to_string(total) +
                     "); the back arc weight A/2 would not be integral");
  }
  const int n = static_cast<int>(numbers.size());
  const PartitionLayout L{n};
  GeneratedInstance inst;
  inst.graph = WeightedDigraph(L.vertex_count());
  WeightedDigraph& g = inst.graph;
  for (int i = 1; i <= n; ++i) {
    const Weight a = numbers[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= 2; ++j) g.add_arc(L.x(i, j), L.y(i, j), -a);
    g.add_arc(L.y(i, 1), L.x(i, 2), 0);
    g.add_arc(L.y(i, 2), L.x(i, 1), 0);
    for (int j = 1; j <= 2; ++j) {
      g.add_arc(L.s_of(i, j), L.t_of(i, j), 0);
      g.add_arc(L.s_of(i, j), L.x(i, j), 0);
      g.add_arc(L.y(i, j), L.t_of(i, j), 0);
    }
  }
  for (int j = 1; j <= 2; ++j) g.add_arc(PartitionLayout::s, L.s_of(1, j), 0);
  for (int j = 1; j <= 2; ++j) g.add_arc(L.t_of(n, j), PartitionLayout::t, 0);
  g.add_arc(PartitionLayout::t, PartitionLayout::s, total / 2);
  inst.budget = n;
  finish_meta(inst, "partition", {{"numbers", numbers}}, subset_sum_half(numbers) ? "yes" : "no");
  return inst;
}

TreeDecomposition pathwidth_certificate_partition(const GeneratedInstance& inst) {
  if (!inst.meta.is_object() || inst.meta.value("family", "") != "partition" || !inst.meta.contains("params"))
    throw InputError("not a partition gadget instance");
  const auto numbers = inst.meta.at("params").at("numbers").get<std::vector<int>>();
  const int n = static_cast<int>(numbers.size());
  const PartitionLayout L{n};
  if (inst.graph.vertex_count() != L.vertex_count()) throw InputError("partition gadget has an unexpected size");
  TreeDecomposition td;
  auto bag = [](std::vector<Vertex> b) {
    std::sort(b.begin(), b.end());
    return b;
  };
  for (int i = 1; i <= n; ++i) {
    td.bags.push_back(bag({PartitionLayout::s, L.s_of(i, 1), L.s_of(i, 2), L.x(i, 1), L.x(i, 2), L.y(i, 1), L.y(i, 2)}));
    td.bags.push_back(bag({PartitionLayout::s, L.s_of(i, 1), L.s_of(i, 2), L.y(i, 1), L.y(i, 2), L.t_of(i, 1), L.t_of(i, 2)}));
  }
  td.bags.push_back(bag({PartitionLayout::s, L.t_of(n, 1), L.t_of(n, 2), PartitionLayout::t}));
  for (int b = 0; b + 1 < static_cast<int>(td.bags.size()); ++b) td.edges.emplace_back(b, b + 1);
  return td;
}

GeneratedInstance gen_multicolored_clique_gadget(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                                                 const std::vector<int>& color, int k) {
  if (k < 1) throw InputError("clique size must be positive");
  if (static_cast<int>(color.size()) != vertex_count) throw InputError("coloring must cover every vertex");
  for (int c : color) {
    if (c < 0 || c >= k) throw InputError("color out of range");
  }
  const int n = vertex_count;
  std::vector<std::vector<int>> cls(static_cast<std::size_t>(k));
  std::vector<int> phi(static_cast<std::size_t>(n));  // 1-based index inside the class
  for (int v = 0; v < n; ++v) {
    auto& c = cls[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])];
    c.push_back(v);
    phi[static_cast<std::size_t>(v)] = static_cast<int>(c.size());
  }
  // edge sets keyed by (i, j), i < j; each edge stored as (endpoint in i, endpoint in j)
  std::vector<std::vector<std::vector<std::pair<int, int>>>> ecls(
      static_cast<std::size_t>(k), std::vector<std::vector<std::pair<int, int>>>(static_cast<std::size_t>(k)));
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n || u == v) throw InputError("edge endpoint out of range");
    int cu = color[static_cast<std::size_t>(u)], cv = color[static_cast<std::size_t>(v)];
    if (cu == cv) throw InputError("coloring is not proper: edge inside class " + std::to_string(cu));
    if (cu > cv) {
      std::swap(u, v);
      std::swap(cu, cv);
    }
    if (!seen.emplace(u, v).second) continue;
    ecls[static_cast<std::size_t>(cu)][static_cast<std::size_t>(cv)].emplace_back(u, v);
  }

  const int d = k + k * (k - 1) / 2;
  GeneratedInstance inst;
  inst.budget = d;
  nlohmann::json params = {{"n", n}, {"k", k}, {"edges", edges}, {"color", color}};

  // Brute-force clique answer when the search space is small.
  std::string expected = "unknown";
  bool degenerate = false;
  for (int i = 0; i < k; ++i) {
    if (cls[static_cast<std::size_t>(i)].empty()) degenerate = true;
    for (int j = i + 1; j < k; ++j) {
      if (ecls[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].empty()) degenerate = true;
    }
  }
  if (degenerate) {
    inst.graph = canonical_no_instance(d);
    params["degenerate"] = true;
    finish_meta(inst, "mcclique", params, "no");
    return inst;
  }
  double space = 1;
  for (const auto& c : cls) space *= static_cast<double>(c.size());
  if (space <= 1e6) {
    std::vector<int> pick(static_cast<std::size_t>(k), 0);
    bool found = false;
    while (!found) {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        for (int j = i + 1; j < k && ok; ++j) {
          const int u = cls[static_cast<std::size_t>(i)][static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
          const int v = cls[static_cast<std::size_t>(j)][static_cast<std::size_t>(pick[static_cast<std::size_t>(j)])];
          ok = seen.count({u, v}) > 0;
        }
      }
      if (ok) {
        found = true;
        break;
      }
      int pos = k - 1;
      while (pos >= 0 && ++pick[static_cast<std::size_t>(pos)] == static_cast<int>(cls[static_cast<std::size_t>(pos)].size())) {
        pick[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
    expected = found ? "yes" : "no";
  }

  WeightedDigraph g(0);
  auto fresh = [&g](int count) {
    const int first = g.vertex_count();
    WeightedDigraph bigger(first + count, std::vector<Arc>(g.arcs().begin(), g.arcs().end()));
    g = std::move(bigger);
    return first;
  };
  // A negative ring through `members`; a single member gets an auxiliary partner.
  auto ring = [&](const std::vector<Vertex>& members) {
    if (members.size() == 1) {
      const Vertex aux = fresh(1);
      g.add_arc(members[0], aux, -n);
      g.add_arc(aux, members[0], 0);
      return;
    }
    for (std::size_t r = 0; r < members.size(); ++r) g.add_arc(members[r], members[(r + 1) % members.size()], -n);
  };

  std::vector<Vertex> vnode(static_cast<std::size_t>(n));
  std::vector<Vertex> t_of(static_cast<std::size_t>(k)), n_of(static_cast<std::size_t>(k)), p_of(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    t_of[static_cast<std::size_t>(i)] = fresh(1);
    std::vector<Vertex> members;
    for (int v : cls[static_cast<std::size_t>(i)]) {
      vnode[static_cast<std::size_t>(v)] = fresh(1);
      members.push_back(vnode[static_cast<std::size_t>(v)]);
    }
    ring(members);
    for (Vertex m : members) g.add_arc(m, t_of[static_cast<std::size_t>(i)], 0);
  }
  std::vector<std::vector<Vertex>> s_of(static_cast<std::size_t>(k), std::vector<Vertex>(static_cast<std::size_t>(k), -1));
  std::vector<std::vector<std::vector<Vertex>>> enode(
      static_cast<std::size_t>(k), std::vector<std::vector<Vertex>>(static_cast<std::size_t>(k)));
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const Vertex s = fresh(1);
      s_of[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s_of[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = s;
      auto& members = enode[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      for (std::size_t r = 0; r < ecls[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].size(); ++r) members.push_back(fresh(1));
      ring(members);
      for (Vertex e : members) g.add_arc(s, e, 0);
    }
  }
  for (int i = 0; i < k; ++i) {
    n_of[static_cast<std::size_t>(i)] = fresh(1);
    p_of[static_cast<std::size_t>(i)] = fresh(1);
  }
  for (int i = 0; i < k; ++i) {
    const Weight vi = static_cast<Weight>(cls[static_cast<std::size_t>(i)].size());
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      const int lo = std::min(i, j), hi = std::max(i, j);
      const Weight eij = static_cast<Weight>(ecls[static_cast<std::size_t>(lo)][static_cast<std::size_t>(hi)].size());
      g.add_arc(t_of[static_cast<std::size_t>(i)], s_of[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], n * (vi + eij - 1));
      const auto& list = ecls[static_cast<std::size_t>(lo)][static_cast<std::size_t>(hi)];
      for (std::size_t r = 0; r < list.size(); ++r) {
        const int endpoint = i == lo ? list[r].first : list[r].second;
        const Weight ph = phi[static_cast<std::size_t>(endpoint)];
        const Vertex e = enode[static_cast<std::size_t>(lo)][static_cast<std::size_t>(hi)][r];
        g.add_arc(e, n_of[static_cast<std::size_t>(i)], -(n - ph));
        g.add_arc(e, p_of[static_cast<std::size_t>(i)], -ph);
      }
    }
    for (int v : cls[static_cast<std::size_t>(i)]) {
      const Weight ph = phi[static_cast<std::size_t>(v)];
      g.add_arc(n_of[static_cast<std::size_t>(i)], vnode[static_cast<std::size_t>(v)], -ph);
      g.add_arc(p_of[static_cast<std::size_t>(i)], vnode[static_cast<std::size_t>(v)], -(n - ph));
    }
  }
  inst.graph = std::move(g);
  finish_meta(inst, "mcclique", params, expected);
  return inst;
}

Subdivision subdivide_to_unit_weights(const WeightedDigraph& g) {
  int extra = 0;
  for (const Arc& a : g.arcs()) {
    if (a.weight != 0) extra += static_cast<int>((a.weight < 0 ? -a.weight : a.weight) - 1);
  }
  Subdivision out;
  out.graph = WeightedDigraph(g.vertex_count() + extra);
  Vertex next = g.vertex_count();
  for (const Arc& a : g.arcs()) {
    if (a.weight == 0) {
      out.graph.add_arc(a.tail, a.head, 0);
      out.arc_back_map.push_back(a.id);
      continue;
    }
    const Weight len = a.weight < 0 ? -a.weight : a.weight;
    const Weight sign = a.weight < 0 ? -1 : 1;
    Vertex cur = a.tail;
    for (Weight step = 1; step <= len; ++step) {
      const Vertex to = step == len ? a.head : next++;
      out.graph.add_arc(cur, to, sign);
      out.arc_back_map.push_back(a.id);
      cur = to;
    }
  }
  return out;
}

GeneratedInstance gen_bedc_chain(const WeightedDigraph& dag, Vertex s, Vertex t, int k, int ell) {
  const int n = dag.vertex_count();
  if (s < 0 || s >= n || t < 0 || t >= n) throw InputError("terminal out of range");
  if (s == t) throw InputError("terminals must differ");
  if (k < 0 || ell < 0) throw InputError("k and ell must be non-negative");
  if (!is_dag(dag)) throw InputError("bedc-chain needs an acyclic input graph");
  GeneratedInstance inst;
  inst.graph = WeightedDigraph(n + (k + 1) * ell);
  for (const Arc& a : dag.arcs()) inst.graph.add_arc(a.tail, a.head, 1);
  Vertex next = n;
  for (int c = 0; c <= k; ++c) {
    Vertex cur = t;
    for (int step = 0; step <= ell; ++step) {
      const Vertex to = step == ell ? s : next++;
      inst.graph.add_arc(cur, to, -1);
      cur = to;
    }
  }
  inst.budget = k;
  std::string expected = "unknown";
  if (dag.arc_count() <= kOracleArcLimit) expected = brute_force_bedc(dag, s, t, k, ell) ? "yes" : "no";
  finish_meta(inst, "bedc-chain", {{"n", n}, {"m", dag.arc_count()}, {"s", s}, {"t", t}, {"k", k}, {"ell", ell}}, expected);
  return inst;
}

WeightedDigraph random_digraph(int n, int m, Weight lo, Weight hi, std::mt19937_64& rng) {
  WeightedDigraph g(n);
  if (n < 2) return g;
  std::uniform_int_distribution<int> vert(0, n - 1);
  std::uniform_int_distribution<Weight> weight(lo, hi);
  for (int i = 0; i < m; ++i) {
    const Vertex u = vert(rng);
    Vertex v = vert(rng);
    while (v == u) v = vert(rng);
    g.add_arc(u, v, weight(rng));
  }
  return g;
}

WeightedDigraph random_dag(int n, int m, std::mt19937_64& rng) {
  WeightedDigraph g(n);
  if (n < 2) return g;
  std::uniform_int_distribution<int> vert(0, n - 1);
  for (int i = 0; i < m; ++i) {
    Vertex u = vert(rng), v = vert(rng);
    while (v == u) v = vert(rng);
    if (u > v) std::swap(u, v);
    g.add_arc(u, v, 1);
  }
  return g;
}

WeightedDigraph gen_hub_triangles(int triangles, Weight lo, Weight hi, std::mt19937_64& rng) {
  WeightedDigraph g(1 + 3 * triangles);
  std::uniform_int_distribution<Weight> weight(lo, hi);
  std::bernoulli_distribution outward(0.5);
  for (int i = 0; i < triangles; ++i) {
    const Vertex a = 1 + 3 * i, b = a + 1, c = a + 2;
    g.add_arc(a, b, weight(rng));
    g.add_arc(b, c, weight(rng));
    g.add_arc(c, a, weight(rng));
    if (outward(rng)) {
      g.add_arc(0, a, weight(rng));
    } else {
      g.add_arc(a, 0, weight(rng));
    }
  }
  return g;
}

WeightedDigraph gen_partial_ktree(int n, int k, double keep, Weight lo, Weight hi, std::mt19937_64& rng) {
  WeightedDigraph g(n);
  std::uniform_int_distribution<Weight> weight(lo, hi);
  std::bernoulli_distribution take(keep), flip(0.5);
  auto add = [&](Vertex u, Vertex v) {
    if (!take(rng)) return;
    if (flip(rng)) std::swap(u, v);
    g.add_arc(u, v, weight(rng));
  };
  const int base = std::min(n, k + 1);
  std::vector<std::vector<Vertex>> cliques;
  std::vector<Vertex> first;
  for (Vertex v = 0; v < base; ++v) {
    for (Vertex u : first) add(u, v);
    first.push_back(v);
  }
  if (static_cast<int>(first.size()) == k + 1) {
    for (int drop = 0; drop <= k; ++drop) {
      std::vector<Vertex> c;
      for (int i = 0; i <= k; ++i) {
        if (i != drop) c.push_back(first[static_cast<std::size_t>(i)]);
      }
      cliques.push_back(c);
    }
  }
  for (Vertex v = base; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, cliques.size() - 1);
    const std::vector<Vertex> c = cliques[pick(rng)];
    for (Vertex u : c) add(u, v);
    for (std::size_t drop = 0; drop < c.size(); ++drop) {
      std::vector<Vertex> next;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i != drop) next.push_back(c[i]);
      }
      next.push_back(v);
      cliques.push_back(next);
    }
  }
  return g;
}

std::string sidecar_path(const std::string& path) {
  return std::filesystem::path(path).replace_extension(".meta.json").string();
}

void write_instance(const GeneratedInstance& inst, const std::string& path) {
  write_text_file(path, write_ndfas(inst.graph, {"family " + inst.meta.value("family", std::string("unknown"))}));
  write_text_file(sidecar_path(path), inst.meta.dump(2) + "\n");
}

}  // namespace ndfas
