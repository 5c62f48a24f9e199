#include "ndfas/branching.hpp"

#include <algorithm>
#include <thread>

#include "ndfas/decomp.hpp"

namespace ndfas {

namespace {

struct Search {
  const WeightedDigraph& g;
  int k;
  int bound;
  const BranchOptions& opts;
  BranchStats* stats;

  void count(std::atomic<long long> BranchStats::*field) const {
    if (stats) ((*stats).*field).fetch_add(1, std::memory_order_relaxed);
  }

  // `deleted` holds the partial solution, `frozen` the arcs this subtree may
  // not delete.
  std::optional<DeletionSet> run(ArcMask& deleted, ArcMask& frozen, DeletionSet& partial) const {
    count(&BranchStats::nodes);
    const auto cycle = shortest_negative_cycle(g, deleted);
    if (!cycle) {
      count(&BranchStats::leaves);
      return partial;
    }
    if (static_cast<int>(partial.size()) >= k) {
      count(&BranchStats::leaves);
      return std::nullopt;
    }
    if (cycle->length > bound) count(&BranchStats::long_cycles);
    std::vector<ArcId> undo;
    std::optional<DeletionSet> found;
    for (ArcId a : cycle->arc_ids) {
      if (frozen[static_cast<std::size_t>(a)]) continue;
      deleted[static_cast<std::size_t>(a)] = true;
      DeletionSet next = partial;
      next.insert(a);
      found = run(deleted, frozen, next);
      deleted[static_cast<std::size_t>(a)] = false;
      if (found) break;
      if (opts.exclude_earlier_siblings) {
        frozen[static_cast<std::size_t>(a)] = true;
        undo.push_back(a);
      }
    }
    for (ArcId a : undo) frozen[static_cast<std::size_t>(a)] = false;
    return found;
  }

  std::optional<DeletionSet> run_parallel() const {
    count(&BranchStats::nodes);
    const auto cycle = shortest_negative_cycle(g);
    if (!cycle) {
      count(&BranchStats::leaves);
      return DeletionSet{};
    }
    if (k <= 0) {
      count(&BranchStats::leaves);
      return std::nullopt;
    }
    if (cycle->length > bound) count(&BranchStats::long_cycles);
    const auto& arcs = cycle->arc_ids;
    std::vector<std::optional<DeletionSet>> results(arcs.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{arcs.size()};
    auto worker = [&] {
      for (std::size_t i = next++; i < arcs.size(); i = next++) {
        if (i > best.load()) continue;
        ArcMask deleted = g.empty_mask();
        ArcMask frozen = g.empty_mask();
        if (opts.exclude_earlier_siblings) {
          for (std::size_t j = 0; j < i; ++j) frozen[static_cast<std::size_t>(arcs[j])] = true;
        }
        deleted[static_cast<std::size_t>(arcs[i])] = true;
        DeletionSet partial({arcs[i]});
        results[i] = run(deleted, frozen, partial);
        if (results[i]) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    const int workers = std::clamp(opts.threads, 1, static_cast<int>(arcs.size()));
    std::vector<std::thread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (auto& r : results) {
      if (r) return r;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<DeletionSet> solve_trivial_few_negative(const WeightedDigraph& g, int k) {
  if (g.w_minus() > k) return std::nullopt;
  return DeletionSet(g.negative_arcs());
}

std::optional<DeletionSet> solve_bounded_cycle_branching(const WeightedDigraph& g, int k, int cycle_bound,
                                                         const BranchOptions& opts, BranchStats* stats) {
  if (k < 0) return std::nullopt;
  Search search{g, k, cycle_bound, opts, stats};
  if (opts.threads > 1) return search.run_parallel();
  ArcMask deleted = g.empty_mask();
  ArcMask frozen = g.empty_mask();
  DeletionSet partial;
  return search.run(deleted, frozen, partial);
}

int td_cycle_bound(const WeightedDigraph& g) {
  const int td = compute_treedepth(g).depth;
  if (td <= 1) return 1;
  return td - 1 >= 30 ? (1 << 30) : (1 << (td - 1));
}

std::optional<DeletionSet> solve_td_plus_k(const WeightedDigraph& g, int k, const BranchOptions& opts,
                                           BranchStats* stats) {
  return solve_bounded_cycle_branching(g, k, td_cycle_bound(g), opts, stats);
}

std::optional<DeletionSet> solve_pm1_few_negative(const WeightedDigraph& g, int k, const BranchOptions& opts,
                                                  BranchStats* stats) {
  if (!g.weights_pm_one()) throw InputError("pm1-wminus needs every weight in {-1,+1}");
  if (auto trivial = solve_trivial_few_negative(g, k)) return trivial;
  return solve_bounded_cycle_branching(g, k, 2 * g.w_minus(), opts, stats);
}

std::optional<DeletionSet> solve_minimum(const BudgetSolver& solve, int k) {
  for (int budget = 0; budget <= k; ++budget) {
    if (auto s = solve(budget)) return s;
  }
  return std::nullopt;
}

}  // namespace ndfas
