#include "ndfas/oracle.hpp"

#include <algorithm>
#include <deque>

namespace ndfas {

namespace {

ArcMask mask_of(const WeightedDigraph& g, const std::vector<ArcId>& ids) {
  ArcMask m = g.empty_mask();
  for (ArcId a : ids) m[static_cast<std::size_t>(a)] = true;
  return m;
}

std::vector<ArcId> all_arcs(const WeightedDigraph& g) {
  std::vector<ArcId> ids(static_cast<std::size_t>(g.arc_count()));
  for (int i = 0; i < g.arc_count(); ++i) ids[static_cast<std::size_t>(i)] = i;
  return ids;
}

std::optional<DeletionSet> first_subset(const WeightedDigraph& g, int k,
                                        const std::function<bool(const ArcMask&)>& works) {
  if (k < 0) return std::nullopt;
  std::optional<DeletionSet> found;
  for_each_subset(all_arcs(g), k, [&](const std::vector<ArcId>& subset) {
    if (!works(mask_of(g, subset))) return false;
    found = DeletionSet(subset);
    return true;
  });
  return found;
}

bool is_acyclic(const WeightedDigraph& g, const ArcMask& deleted) {
  const int n = g.vertex_count();
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (const Arc& a : g.arcs()) {
    if (!deleted[static_cast<std::size_t>(a.id)]) ++indeg[static_cast<std::size_t>(a.head)];
  }
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < n; ++v) {
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  }
  int done = 0;
  while (!ready.empty()) {
    const Vertex v = ready.back();
    ready.pop_back();
    ++done;
    for (ArcId a : g.out_arcs(v)) {
      if (deleted[static_cast<std::size_t>(a)]) continue;
      if (--indeg[static_cast<std::size_t>(g.arc(a).head)] == 0) ready.push_back(g.arc(a).head);
    }
  }
  return done == n;
}

void check_terminals(const WeightedDigraph& g, const std::vector<std::vector<Vertex>>& xs,
                     const std::vector<std::vector<Vertex>>& ys) {
  if (xs.size() != ys.size()) throw InputError("skew instance needs as many sinks as sources");
  std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
  auto claim = [&](const std::vector<Vertex>& set) {
    for (Vertex v : set) {
      if (v < 0 || v >= g.vertex_count()) throw InputError("terminal vertex out of range");
      if (used[static_cast<std::size_t>(v)]) throw InputError("terminal sets overlap at vertex " + std::to_string(v));
      used[static_cast<std::size_t>(v)] = true;
    }
  };
  for (const auto& x : xs) claim(x);
  for (const auto& y : ys) claim(y);
}

}  // namespace

bool for_each_subset(const std::vector<ArcId>& items, int max_size,
                     const std::function<bool(const std::vector<ArcId>&)>& visit) {
  const int m = static_cast<int>(items.size());
  std::vector<int> idx;
  std::vector<ArcId> subset;
  for (int size = 0; size <= std::min(max_size, m); ++size) {
    idx.resize(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      subset.clear();
      for (int i : idx) subset.push_back(items[static_cast<std::size_t>(i)]);
      if (visit(subset)) return true;
      int pos = size - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - size + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < size; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  return false;
}

double subset_count(int m, int k) {
  double total = 0;
  double binom = 1;
  for (int i = 0; i <= std::min(k, m); ++i) {
    total += binom;
    binom = binom * (m - i) / (i + 1);
  }
  return total;
}

std::optional<DeletionSet> brute_force_ndfas(const WeightedDigraph& g, int k) {
  return first_subset(g, k, [&](const ArcMask& m) { return !has_negative_cycle_floyd_warshall(g, m); });
}

bool has_forbidden_skew_path(const WeightedDigraph& g, const ArcMask& deleted,
                             const std::vector<std::vector<Vertex>>& xs, const std::vector<std::vector<Vertex>>& ys) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto reach = reachable_from(g, deleted, xs[i]);
    for (std::size_t j = 0; j <= i; ++j) {
      for (Vertex y : ys[j]) {
        if (reach[static_cast<std::size_t>(y)]) return true;
      }
    }
  }
  return false;
}

std::optional<DeletionSet> brute_force_skew_cut(const WeightedDigraph& g, const std::vector<std::vector<Vertex>>& xs,
                                                const std::vector<std::vector<Vertex>>& ys, int k) {
  check_terminals(g, xs, ys);
  return first_subset(g, k, [&](const ArcMask& m) { return !has_forbidden_skew_path(g, m, xs, ys); });
}

bool has_u_meeting_cycle(const WeightedDigraph& g, const ArcMask& deleted, const std::vector<ArcId>& u) {
  for (ArcId a : u) {
    if (!deleted.empty() && deleted[static_cast<std::size_t>(a)]) continue;
    const Arc& arc = g.arc(a);
    const Vertex from[] = {arc.head};
    if (reachable_from(g, deleted, from)[static_cast<std::size_t>(arc.tail)]) return true;
  }
  return false;
}

std::optional<DeletionSet> brute_force_subset_dfas(const WeightedDigraph& g, const std::vector<ArcId>& u, int k) {
  for (ArcId a : u) {
    if (a < 0 || a >= g.arc_count()) throw InputError("unknown arc " + std::to_string(a) + " in U");
  }
  return first_subset(g, k, [&](const ArcMask& m) { return !has_u_meeting_cycle(g, m, u); });
}

std::optional<DeletionSet> brute_force_fas(const WeightedDigraph& g, int k) {
  return first_subset(g, k, [&](const ArcMask& m) { return is_acyclic(g, m); });
}

std::optional<DeletionSet> brute_force_bedc(const WeightedDigraph& g, Vertex s, Vertex t, int k, int ell) {
  const int n = g.vertex_count();
  if (s < 0 || s >= n || t < 0 || t >= n) throw InputError("terminal out of range");
  return first_subset(g, k, [&](const ArcMask& m) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::deque<Vertex> queue{s};
    dist[static_cast<std::size_t>(s)] = 0;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (ArcId a : g.out_arcs(v)) {
        if (m[static_cast<std::size_t>(a)]) continue;
        const Vertex h = g.arc(a).head;
        if (dist[static_cast<std::size_t>(h)] < 0) {
          dist[static_cast<std::size_t>(h)] = dist[static_cast<std::size_t>(v)] + 1;
          queue.push_back(h);
        }
      }
    }
    const int d = dist[static_cast<std::size_t>(t)];
    return d < 0 || d > ell;
  });
}

std::vector<Cycle> enumerate_simple_cycles(const WeightedDigraph& g) {
  // Each cycle is grown from its smallest arc using only larger arcs, which
  // yields every simple cycle exactly once.
  std::vector<Cycle> out;
  const int n = g.vertex_count();
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);
  std::vector<ArcId> path;
  for (const Arc& first : g.arcs()) {
    const Vertex start = first.tail;
    std::function<void(Vertex, Weight)> grow = [&](Vertex v, Weight w) {
      if (v == start) {
        out.push_back(Cycle{path, static_cast<int>(path.size()), w});
        return;
      }
      for (ArcId b : g.out_arcs(v)) {
        if (b <= first.id) continue;
        const Arc& arc = g.arc(b);
        if (arc.head != start && on_path[static_cast<std::size_t>(arc.head)]) continue;
        on_path[static_cast<std::size_t>(arc.head)] = true;
        path.push_back(b);
        grow(arc.head, w + arc.weight);
        path.pop_back();
        on_path[static_cast<std::size_t>(arc.head)] = arc.head == start;
      }
    };
    std::fill(on_path.begin(), on_path.end(), false);
    on_path[static_cast<std::size_t>(start)] = true;
    on_path[static_cast<std::size_t>(first.head)] = true;
    path.assign(1, first.id);
    if (first.head == start) continue;
    grow(first.head, first.weight);
  }
  return out;
}

}  // namespace ndfas
