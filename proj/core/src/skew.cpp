#include "ndfas/skew.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "ndfas/oracle.hpp"

namespace ndfas {

namespace {

bool active(const ArcMask& deleted, const ArcMask& chosen, ArcId a) {
  return !deleted[static_cast<std::size_t>(a)] && !chosen[static_cast<std::size_t>(a)];
}

// Unit-capacity max flow from the `in_s` vertices to the `in_t` vertices,
// stopping once it exceeds `limit`. Returns the flow value; `flow` holds the
// per-arc flow.
int max_flow(const WeightedDigraph& g, const ArcMask& deleted, const ArcMask& chosen, const std::vector<char>& in_s,
             const std::vector<char>& in_t, int limit, std::vector<char>& flow) {
  const int n = g.vertex_count();
  flow.assign(static_cast<std::size_t>(g.arc_count()), 0);
  int value = 0;
  std::vector<ArcId> via(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n));
  while (value <= limit) {
    std::fill(seen.begin(), seen.end(), 0);
    std::deque<Vertex> queue;
    for (Vertex v = 0; v < n; ++v) {
      if (in_s[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        via[static_cast<std::size_t>(v)] = -1;
        queue.push_back(v);
      }
    }
    Vertex reached = -1;
    while (!queue.empty() && reached < 0) {
      const Vertex v = queue.front();
      queue.pop_front();
      auto visit = [&](Vertex u, ArcId a) {
        if (seen[static_cast<std::size_t>(u)]) return;
        seen[static_cast<std::size_t>(u)] = 1;
        via[static_cast<std::size_t>(u)] = a;
        if (in_t[static_cast<std::size_t>(u)] && reached < 0) reached = u;
        queue.push_back(u);
      };
      for (ArcId a : g.out_arcs(v)) {
        if (active(deleted, chosen, a) && !flow[static_cast<std::size_t>(a)]) visit(g.arc(a).head, a);
      }
      for (ArcId a : g.in_arcs(v)) {
        if (active(deleted, chosen, a) && flow[static_cast<std::size_t>(a)]) visit(g.arc(a).tail, a);
      }
    }
    if (reached < 0) break;
    for (Vertex v = reached; via[static_cast<std::size_t>(v)] >= 0;) {
      const ArcId a = via[static_cast<std::size_t>(v)];
      const Arc& arc = g.arc(a);
      if (arc.head == v && !flow[static_cast<std::size_t>(a)]) {
        flow[static_cast<std::size_t>(a)] = 1;
        v = arc.tail;
      } else {
        flow[static_cast<std::size_t>(a)] = 0;
        v = arc.head;
      }
    }
    ++value;
  }
  return value;
}

// Vertices that cannot reach a sink in the residual network: the source side
// of the farthest minimum cut.
std::vector<char> farthest_source_side(const WeightedDigraph& g, const ArcMask& deleted, const ArcMask& chosen,
                                       const std::vector<char>& in_t, const std::vector<char>& flow) {
  const int n = g.vertex_count();
  std::vector<char> reaches(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    if (in_t[static_cast<std::size_t>(v)]) {
      reaches[static_cast<std::size_t>(v)] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const Vertex y = stack.back();
    stack.pop_back();
    auto mark = [&](Vertex x) {
      if (!reaches[static_cast<std::size_t>(x)]) {
        reaches[static_cast<std::size_t>(x)] = 1;
        stack.push_back(x);
      }
    };
    for (ArcId a : g.in_arcs(y)) {
      if (active(deleted, chosen, a) && !flow[static_cast<std::size_t>(a)]) mark(g.arc(a).tail);
    }
    for (ArcId a : g.out_arcs(y)) {
      if (active(deleted, chosen, a) && flow[static_cast<std::size_t>(a)]) mark(g.arc(a).head);
    }
  }
  for (auto& r : reaches) r = !r;
  return reaches;
}

void enumerate_cuts(const WeightedDigraph& g, const ArcMask& deleted, ArcMask& chosen, std::vector<ArcId>& chosen_list,
                    const std::vector<char>& in_s, const std::vector<char>& in_t, int budget,
                    std::vector<DeletionSet>& out) {
  std::vector<char> flow;
  const int lambda = max_flow(g, deleted, chosen, in_s, in_t, budget, flow);
  if (lambda > budget) return;
  if (lambda == 0) {
    out.emplace_back(chosen_list);
    return;
  }
  const std::vector<char> r_max = farthest_source_side(g, deleted, chosen, in_t, flow);
  ArcId pick = -1;
  for (const Arc& a : g.arcs()) {
    if (active(deleted, chosen, a.id) && r_max[static_cast<std::size_t>(a.tail)] && !r_max[static_cast<std::size_t>(a.head)]) {
      pick = a.id;
      break;
    }
  }
  // lambda >= 1 guarantees an arc leaves the farthest source side.
  if (pick < 0) throw std::logic_error("no arc leaves a nonzero cut");
  const Vertex head = g.arc(pick).head;

  chosen[static_cast<std::size_t>(pick)] = true;
  chosen_list.push_back(pick);
  enumerate_cuts(g, deleted, chosen, chosen_list, r_max, in_t, budget - 1, out);
  chosen_list.pop_back();
  chosen[static_cast<std::size_t>(pick)] = false;

  if (!in_t[static_cast<std::size_t>(head)]) {
    std::vector<char> grown = r_max;
    grown[static_cast<std::size_t>(head)] = 1;
    enumerate_cuts(g, deleted, chosen, chosen_list, grown, in_t, budget, out);
  }
}

void check_skew_terminals(int n, const std::vector<std::vector<Vertex>>& xs, const std::vector<std::vector<Vertex>>& ys) {
  if (xs.size() != ys.size()) throw InputError("skew instance needs as many sinks as sources");
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto claim = [&](const std::vector<Vertex>& set) {
    for (Vertex v : set) {
      if (v < 0 || v >= n) throw InputError("terminal vertex out of range");
      if (used[static_cast<std::size_t>(v)]) throw InputError("terminal sets overlap at vertex " + std::to_string(v));
      used[static_cast<std::size_t>(v)] = 1;
    }
  };
  for (const auto& x : xs) claim(x);
  for (const auto& y : ys) claim(y);
}

std::optional<DeletionSet> skew_recurse(const WeightedDigraph& g, ArcMask& deleted,
                                        const std::vector<std::vector<Vertex>>& xs,
                                        const std::vector<std::vector<Vertex>>& ys, std::size_t p, int budget) {
  if (budget < 0) return std::nullopt;
  if (p == 0) return DeletionSet{};
  std::vector<Vertex> to;
  for (std::size_t j = 0; j < p; ++j) to.insert(to.end(), ys[j].begin(), ys[j].end());
  const auto& from = xs[p - 1];
  if (from.empty() || to.empty()) return skew_recurse(g, deleted, xs, ys, p - 1, budget);
  std::vector<char> in_s(static_cast<std::size_t>(g.vertex_count()), 0), in_t(in_s);
  for (Vertex v : from) in_s[static_cast<std::size_t>(v)] = 1;
  for (Vertex v : to) in_t[static_cast<std::size_t>(v)] = 1;
  ArcMask chosen = g.empty_mask();
  std::vector<ArcId> chosen_list;
  std::vector<DeletionSet> cuts;
  enumerate_cuts(g, deleted, chosen, chosen_list, in_s, in_t, budget, cuts);
  for (const DeletionSet& cut : cuts) {
    for (ArcId a : cut.arc_ids()) deleted[static_cast<std::size_t>(a)] = true;
    auto rest = skew_recurse(g, deleted, xs, ys, p - 1, budget - static_cast<int>(cut.size()));
    for (ArcId a : cut.arc_ids()) deleted[static_cast<std::size_t>(a)] = false;
    if (rest) return rest->united(cut);
  }
  return std::nullopt;
}

std::optional<DeletionSet> skew_solve(const WeightedDigraph& g, const std::vector<std::vector<Vertex>>& xs,
                                      const std::vector<std::vector<Vertex>>& ys, int budget, const SkewOptions& opts) {
  if (opts.use_oracle) return brute_force_skew_cut(g, xs, ys, budget);
  ArcMask deleted = g.empty_mask();
  auto s = skew_recurse(g, deleted, xs, ys, xs.size(), budget);
  if (s) {
    if (static_cast<int>(s->size()) > budget || has_forbidden_skew_path(g, s->to_mask(g.arc_count()), xs, ys))
      throw std::logic_error("skew separator produced an invalid cut");
  }
  return s;
}

}  // namespace

std::vector<DeletionSet> important_cuts(const WeightedDigraph& g, const ArcMask& deleted,
                                        const std::vector<Vertex>& from, const std::vector<Vertex>& to, int k) {
  std::vector<char> in_s(static_cast<std::size_t>(g.vertex_count()), 0), in_t(in_s);
  for (Vertex v : from) in_s[static_cast<std::size_t>(v)] = 1;
  for (Vertex v : to) {
    if (in_s[static_cast<std::size_t>(v)]) throw InputError("cut terminals overlap");
    in_t[static_cast<std::size_t>(v)] = 1;
  }
  ArcMask del = deleted.empty() ? g.empty_mask() : deleted;
  ArcMask chosen = g.empty_mask();
  std::vector<ArcId> chosen_list;
  std::vector<DeletionSet> out;
  if (k >= 0) enumerate_cuts(g, del, chosen, chosen_list, in_s, in_t, k, out);
  return out;
}

std::optional<DeletionSet> solve_skew_separator(const SkewInstance& inst, const SkewOptions& opts) {
  check_skew_terminals(inst.graph.vertex_count(), inst.sources, inst.sinks);
  if (inst.budget < 0) return std::nullopt;
  return skew_solve(inst.graph, inst.sources, inst.sinks, inst.budget, opts);
}

ZeroPropagationGraph build_zero_propagation_graph(const WeightedDigraph& g) {
  return build_zero_propagation_graph(g, g.empty_mask());
}

ZeroPropagationGraph build_zero_propagation_graph(const WeightedDigraph& g, const ArcMask& deleted) {
  const int n = g.vertex_count();
  auto gone = [&](ArcId a) { return !deleted.empty() && deleted[static_cast<std::size_t>(a)]; };
  ZeroPropagationGraph z;
  z.split.assign(static_cast<std::size_t>(n), false);
  for (const Arc& a : g.arcs()) {
    if (gone(a.id) || a.weight == 0) continue;
    z.split[static_cast<std::size_t>(a.tail)] = true;
    z.split[static_cast<std::size_t>(a.head)] = true;
  }
  z.plus_of.resize(static_cast<std::size_t>(n));
  z.minus_of.resize(static_cast<std::size_t>(n));
  int next = 0;
  for (Vertex v = 0; v < n; ++v) {
    z.plus_of[static_cast<std::size_t>(v)] = next++;
    z.minus_of[static_cast<std::size_t>(v)] = z.split[static_cast<std::size_t>(v)] ? next++ : z.plus_of[static_cast<std::size_t>(v)];
  }
  z.graph = WeightedDigraph(next);
  for (const Arc& a : g.arcs()) {
    if (gone(a.id) || a.weight != 0) continue;
    z.graph.add_arc(z.plus_of[static_cast<std::size_t>(a.tail)], z.minus_of[static_cast<std::size_t>(a.head)], 0);
    z.arc_back_map.push_back(a.id);
  }
  return z;
}

double ordered_bell(int n) {
  std::vector<double> a(static_cast<std::size_t>(n) + 1, 0);
  a[0] = 1;
  for (int m = 1; m <= n; ++m) {
    double binom = 1;  // C(m, j)
    for (int j = 1; j <= m; ++j) {
      binom = binom * (m - j + 1) / j;
      a[static_cast<std::size_t>(m)] += binom * a[static_cast<std::size_t>(m - j)];
    }
  }
  return a[static_cast<std::size_t>(n)];
}

bool for_each_ordered_partition(int n, const std::function<bool(const std::vector<int>&, int)>& visit, int cap) {
  if (n > cap) {
    throw ResourceError("ordered partitions of " + std::to_string(n) + " items exceed the cap of " + std::to_string(cap),
                        ordered_bell(n));
  }
  std::vector<int> block_of(static_cast<std::size_t>(n), 0);
  if (n == 0) return visit(block_of, 0);
  std::vector<int> uses;
  for (int p = 1; p <= n; ++p) {
    uses.assign(static_cast<std::size_t>(p), 0);
    int unused = p;
    std::function<bool(int)> assign = [&](int i) {
      if (i == n) return visit(block_of, p);
      for (int b = 0; b < p; ++b) {
        const bool fresh = uses[static_cast<std::size_t>(b)] == 0;
        // Items left after this one must still cover the unused blocks.
        if (unused - (fresh ? 1 : 0) > n - i - 1) continue;
        block_of[static_cast<std::size_t>(i)] = b;
        ++uses[static_cast<std::size_t>(b)];
        if (fresh) --unused;
        const bool stop = assign(i + 1);
        if (fresh) ++unused;
        --uses[static_cast<std::size_t>(b)];
        if (stop) return true;
      }
      return false;
    };
    if (assign(0)) return true;
  }
  return false;
}

std::vector<std::vector<std::vector<int>>> enumerate_ordered_partitions(int n, int cap) {
  std::vector<std::vector<std::vector<int>>> all;
  for_each_ordered_partition(
      n,
      [&](const std::vector<int>& block_of, int blocks) {
        std::vector<std::vector<int>> part(static_cast<std::size_t>(blocks));
        for (int i = 0; i < n; ++i) part[static_cast<std::size_t>(block_of[static_cast<std::size_t>(i)])].push_back(i);
        all.push_back(std::move(part));
        return false;
      },
      cap);
  return all;
}

std::optional<DeletionSet> solve_nonzero_count(const WeightedDigraph& g, int k, const NonzeroOptions& opts,
                                               NonzeroStats* stats) {
  if (k < 0) return std::nullopt;
  if (auto trivial = g.w_minus() <= k ? std::optional<DeletionSet>(DeletionSet(g.negative_arcs())) : std::nullopt)
    return trivial;

  const std::vector<ArcId> nonzero = g.nonzero_arcs();
  {
    std::vector<char> endpoint(static_cast<std::size_t>(g.vertex_count()), 0);
    for (ArcId a : nonzero) endpoint[static_cast<std::size_t>(g.arc(a).tail)] = endpoint[static_cast<std::size_t>(g.arc(a).head)] = 1;
    const int z = static_cast<int>(std::count(endpoint.begin(), endpoint.end(), 1));
    if (z > opts.partition_cap) {
      throw ResourceError("skew-nonzero would enumerate ordered partitions of " + std::to_string(z) + " vertices",
                          ordered_bell(z) * subset_count(static_cast<int>(nonzero.size()), k));
    }
  }

  std::optional<DeletionSet> answer;
  for_each_subset(nonzero, k, [&](const std::vector<ArcId>& guess) {
    if (stats) ++stats->guesses;
    const DeletionSet a_prime(guess);
    const ArcMask mask = a_prime.to_mask(g.arc_count());
    const ZeroPropagationGraph zpg = build_zero_propagation_graph(g, mask);
    std::vector<Vertex> z_vertices;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (zpg.split[static_cast<std::size_t>(v)]) z_vertices.push_back(v);
    }
    std::vector<int> index_of(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < z_vertices.size(); ++i) index_of[static_cast<std::size_t>(z_vertices[i])] = static_cast<int>(i);
    std::vector<const Arc*> kept_negative;
    for (const Arc& a : g.arcs()) {
      if (a.weight < 0 && !mask[static_cast<std::size_t>(a.id)]) kept_negative.push_back(&a);
    }
    const int budget = k - static_cast<int>(a_prime.size());

    return for_each_ordered_partition(
        static_cast<int>(z_vertices.size()),
        [&](const std::vector<int>& block_of, int p) {
          if (opts.prune_negative_arcs) {
            for (const Arc* a : kept_negative) {
              if (block_of[static_cast<std::size_t>(index_of[static_cast<std::size_t>(a->tail)])] >=
                  block_of[static_cast<std::size_t>(index_of[static_cast<std::size_t>(a->head)])])
                return false;
            }
          }
          if (stats) ++stats->partitions;
          // Sources (Z_1+, ..., Z_p+, {}) and sinks ({}, Z_1-, ..., Z_p-).
          std::vector<std::vector<Vertex>> xs(static_cast<std::size_t>(p) + 1), ys(static_cast<std::size_t>(p) + 1);
          for (std::size_t i = 0; i < z_vertices.size(); ++i) {
            const int b = block_of[i];
            xs[static_cast<std::size_t>(b)].push_back(zpg.plus_of[static_cast<std::size_t>(z_vertices[i])]);
            ys[static_cast<std::size_t>(b) + 1].push_back(zpg.minus_of[static_cast<std::size_t>(z_vertices[i])]);
          }
          if (stats) ++stats->skew_calls;
          auto cut = skew_solve(zpg.graph, xs, ys, budget, opts.skew);
          if (!cut) return false;
          DeletionSet candidate = a_prime;
          for (ArcId a : cut->arc_ids()) candidate.insert(zpg.arc_back_map[static_cast<std::size_t>(a)]);
          if (!verify_solution(g, candidate, k).valid()) return false;
          answer = std::move(candidate);
          return true;
        },
        opts.partition_cap);
  });
  return answer;
}

}  // namespace ndfas
