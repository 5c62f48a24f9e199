#include "ndfas/pm_one.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <random>

#include "ndfas/oracle.hpp"

namespace ndfas {

namespace {

void require_pm_one(const WeightedDigraph& g) {
  if (!g.weights_pm_one()) throw InputError("pm1-wplus needs every weight in {-1,+1}");
}

bool exhaustive_path(const WeightedDigraph& g, Vertex from, Vertex to, int max_len, Weight target, int positives) {
  std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
  on_path[static_cast<std::size_t>(from)] = 1;
  // A path reaching `to` never revisits it, so only `from`..`to` interior is tracked.
  auto dfs = [&](auto&& self, Vertex v, int len, Weight weight, int pos_left) -> bool {
    if (v == to) return weight >= target;
    if (len == max_len) return false;
    if (weight + std::min(max_len - len, pos_left) < target) return false;
    for (ArcId a : g.out_arcs(v)) {
      const Arc& arc = g.arc(a);
      if (on_path[static_cast<std::size_t>(arc.head)]) continue;
      on_path[static_cast<std::size_t>(arc.head)] = 1;
      const bool hit = self(self, arc.head, len + 1, weight + arc.weight, pos_left - (arc.weight > 0 ? 1 : 0));
      on_path[static_cast<std::size_t>(arc.head)] = 0;
      if (hit) return true;
    }
    return false;
  };
  return dfs(dfs, from, 0, 0, positives);
}

bool colorful_path(const WeightedDigraph& g, Vertex from, Vertex to, int max_len, Weight target,
                   const NonnegCycleOptions& opts) {
  const int colors = max_len + 1;
  const int n = g.vertex_count();
  const double trials_d = std::ceil(std::exp(static_cast<double>(colors)) * std::log(1.0 / opts.failure_probability));
  const long long trials = static_cast<long long>(trials_d);
  constexpr Weight kNone = std::numeric_limits<Weight>::min() / 4;
  std::mt19937_64 rng(opts.seed ^ (static_cast<std::uint64_t>(from) << 32) ^ static_cast<std::uint64_t>(to));
  std::uniform_int_distribution<int> pick(0, colors - 1);
  const std::size_t sets = std::size_t{1} << colors;
  std::vector<int> color(static_cast<std::size_t>(n));
  std::vector<Weight> best(sets * static_cast<std::size_t>(n));
  for (long long t = 0; t < trials; ++t) {
    for (auto& c : color) c = pick(rng);
    std::fill(best.begin(), best.end(), kNone);
    best[(std::size_t{1} << color[static_cast<std::size_t>(from)]) * static_cast<std::size_t>(n) + static_cast<std::size_t>(from)] = 0;
    // Color sets in increasing numeric order visit subsets before supersets.
    for (std::size_t s = 1; s < sets; ++s) {
      for (Vertex v = 0; v < n; ++v) {
        const Weight w = best[s * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
        if (w == kNone) continue;
        if (v == to) {
          if (w >= target) return true;
          continue;
        }
        for (ArcId a : g.out_arcs(v)) {
          const Arc& arc = g.arc(a);
          const std::size_t bit = std::size_t{1} << color[static_cast<std::size_t>(arc.head)];
          if (s & bit) continue;
          Weight& slot = best[(s | bit) * static_cast<std::size_t>(n) + static_cast<std::size_t>(arc.head)];
          slot = std::max(slot, w + arc.weight);
        }
      }
    }
  }
  return false;
}

// Shortest cycle through some arc of U (fewest arcs; ties by lowest U arc).
std::optional<std::vector<ArcId>> shortest_u_cycle(const WeightedDigraph& g, const ArcMask& deleted,
                                                   const std::vector<ArcId>& u) {
  std::optional<std::vector<ArcId>> best;
  const int n = g.vertex_count();
  std::vector<ArcId> via(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n));
  for (ArcId a : u) {
    if (deleted[static_cast<std::size_t>(a)]) continue;
    const Arc& arc = g.arc(a);
    std::fill(seen.begin(), seen.end(), 0);
    std::deque<Vertex> queue{arc.head};
    seen[static_cast<std::size_t>(arc.head)] = 1;
    while (!queue.empty() && !seen[static_cast<std::size_t>(arc.tail)]) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (ArcId b : g.out_arcs(v)) {
        if (deleted[static_cast<std::size_t>(b)]) continue;
        const Vertex h = g.arc(b).head;
        if (seen[static_cast<std::size_t>(h)]) continue;
        seen[static_cast<std::size_t>(h)] = 1;
        via[static_cast<std::size_t>(h)] = b;
        queue.push_back(h);
      }
    }
    if (!seen[static_cast<std::size_t>(arc.tail)]) continue;
    std::vector<ArcId> cycle;
    for (Vertex v = arc.tail; v != arc.head; v = g.arc(via[static_cast<std::size_t>(v)]).tail) cycle.push_back(via[static_cast<std::size_t>(v)]);
    cycle.push_back(a);
    std::reverse(cycle.begin(), cycle.end());
    if (!best || cycle.size() < best->size()) best = std::move(cycle);
  }
  return best;
}

bool subset_branch(const WeightedDigraph& g, ArcMask& deleted, const std::vector<ArcId>& u, int budget,
                   std::vector<ArcId>& chosen) {
  const auto cycle = shortest_u_cycle(g, deleted, u);
  if (!cycle) return true;
  if (budget == 0) return false;
  for (ArcId a : *cycle) {
    deleted[static_cast<std::size_t>(a)] = true;
    chosen.push_back(a);
    if (subset_branch(g, deleted, u, budget - 1, chosen)) return true;
    chosen.pop_back();
    deleted[static_cast<std::size_t>(a)] = false;
  }
  return false;
}

}  // namespace

bool nonneg_cycle_through_arc(const WeightedDigraph& g, ArcId arc, const NonnegCycleOptions& opts) {
  require_pm_one(g);
  const Arc& a = g.arc(arc);
  const int w_plus = g.w_plus();
  const int max_len = 2 * w_plus - 1;
  if (max_len < 1) return false;
  const Weight target = -a.weight;
  if (opts.color_coding) return colorful_path(g, a.head, a.tail, max_len, target, opts);
  return exhaustive_path(g, a.head, a.tail, max_len, target, w_plus);
}

std::optional<DeletionSet> solve_subset_dfas(const WeightedDigraph& g, const std::vector<ArcId>& u, int k) {
  for (ArcId a : u) {
    if (a < 0 || a >= g.arc_count()) throw InputError("unknown arc " + std::to_string(a) + " in U");
  }
  for (int budget = 0; budget <= k; ++budget) {
    ArcMask deleted = g.empty_mask();
    std::vector<ArcId> chosen;
    if (subset_branch(g, deleted, u, budget, chosen)) {
      std::sort(chosen.begin(), chosen.end());
      return DeletionSet(chosen);
    }
  }
  return std::nullopt;
}

int pm1_short_cycle_bound(int w_plus) { return 2 * w_plus * w_plus + 2 * w_plus; }

std::optional<DeletionSet> solve_pm1_few_positive(const WeightedDigraph& g, int k, const NonnegCycleOptions& opts,
                                                  PmOneStats* stats) {
  require_pm_one(g);
  auto rec = [&](auto&& self, const DeletionSet& removed, int budget) -> std::optional<DeletionSet> {
    if (budget < 0) return std::nullopt;
    if (stats) ++stats->nodes;
    std::vector<ArcId> kept;
    const WeightedDigraph cur = g.without(removed.to_mask(g.arc_count()), &kept);
    const auto cycle = shortest_negative_cycle(cur);
    if (cycle && cycle->length <= pm1_short_cycle_bound(cur.w_plus())) {
      if (budget == 0) return std::nullopt;
      for (ArcId a : cycle->arc_ids) {
        DeletionSet next = removed;
        next.insert(kept[static_cast<std::size_t>(a)]);
        if (auto s = self(self, next, budget - 1)) return s;
      }
      return std::nullopt;
    }
    std::vector<ArcId> u;
    for (int a = 0; a < cur.arc_count(); ++a) {
      if (!nonneg_cycle_through_arc(cur, a, opts)) u.push_back(a);
    }
    if (stats) ++stats->subset_calls;
    const auto x = solve_subset_dfas(cur, u, budget);
    if (!x) return std::nullopt;
    DeletionSet out = removed;
    for (ArcId a : x->arc_ids()) out.insert(kept[static_cast<std::size_t>(a)]);
    return out;
  };
  auto s = rec(rec, DeletionSet{}, k);
  if (s && !verify_solution(g, *s, k).valid()) throw std::logic_error("pm1-wplus produced an invalid solution");
  return s;
}

}  // namespace ndfas
