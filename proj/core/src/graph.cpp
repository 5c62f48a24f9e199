#include "ndfas/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

namespace ndfas {

namespace {

constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

bool is_deleted(const ArcMask& deleted, ArcId a) {
  return !deleted.empty() && deleted[static_cast<std::size_t>(a)];
}

using Matrix = std::vector<Weight>;

// Min-plus product of two n x n matrices.
Matrix min_plus(const Matrix& a, const Matrix& b, int n) {
  Matrix c(static_cast<std::size_t>(n) * n, kInf);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Weight aik = a[i * n + k];
      if (aik >= kInf) continue;
      for (int j = 0; j < n; ++j) {
        const Weight bkj = b[k * n + j];
        if (bkj >= kInf) continue;
        Weight& cij = c[i * n + j];
        cij = std::min(cij, aik + bkj);
      }
    }
  }
  return c;
}

bool negative_diagonal(const Matrix& m, int n) {
  for (int i = 0; i < n; ++i) {
    if (m[i * n + i] < 0) return true;
  }
  return false;
}

}  // namespace

WeightedDigraph::WeightedDigraph(int vertex_count)
    : vertex_count_(vertex_count),
      out_(static_cast<std::size_t>(vertex_count)),
      in_(static_cast<std::size_t>(vertex_count)) {
  if (vertex_count < 0) throw InputError("negative vertex count");
}

WeightedDigraph::WeightedDigraph(int vertex_count, std::vector<Arc> arcs)
    : WeightedDigraph(vertex_count) {
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i].id != static_cast<ArcId>(i)) {
      throw InputError("arc ids must be dense and in order; arc at position " + std::to_string(i) +
                       " has id " + std::to_string(arcs[i].id));
    }
    add_arc(arcs[i].tail, arcs[i].head, arcs[i].weight);
  }
}

ArcId WeightedDigraph::add_arc(Vertex tail, Vertex head, Weight weight) {
  if (tail < 0 || tail >= vertex_count_ || head < 0 || head >= vertex_count_) {
    throw InputError("arc endpoint out of range: (" + std::to_string(tail) + ", " +
                     std::to_string(head) + ")");
  }
  if (tail == head) throw InputError("loops are not allowed (vertex " + std::to_string(tail) + ")");
  const ArcId id = arc_count();
  arcs_.push_back(Arc{id, tail, head, weight});
  out_[static_cast<std::size_t>(tail)].push_back(id);
  in_[static_cast<std::size_t>(head)].push_back(id);
  return id;
}

std::vector<ArcId> WeightedDigraph::negative_arcs() const {
  std::vector<ArcId> r;
  for (const Arc& a : arcs_)
    if (a.weight < 0) r.push_back(a.id);
  return r;
}

std::vector<ArcId> WeightedDigraph::zero_arcs() const {
  std::vector<ArcId> r;
  for (const Arc& a : arcs_)
    if (a.weight == 0) r.push_back(a.id);
  return r;
}

std::vector<ArcId> WeightedDigraph::positive_arcs() const {
  std::vector<ArcId> r;
  for (const Arc& a : arcs_)
    if (a.weight > 0) r.push_back(a.id);
  return r;
}

std::vector<ArcId> WeightedDigraph::nonzero_arcs() const {
  std::vector<ArcId> r;
  for (const Arc& a : arcs_)
    if (a.weight != 0) r.push_back(a.id);
  return r;
}

int WeightedDigraph::w_minus() const {
  return static_cast<int>(std::count_if(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.weight < 0; }));
}

int WeightedDigraph::w_plus() const {
  return static_cast<int>(std::count_if(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.weight > 0; }));
}

bool WeightedDigraph::weights_within(Weight lo, Weight hi) const {
  return std::all_of(arcs_.begin(), arcs_.end(), [&](const Arc& a) { return a.weight >= lo && a.weight <= hi; });
}

bool WeightedDigraph::weights_pm_one() const {
  return std::all_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.weight == 1 || a.weight == -1; });
}

WeightedDigraph WeightedDigraph::without(const ArcMask& deleted, std::vector<ArcId>* kept_ids) const {
  WeightedDigraph r(vertex_count_);
  if (kept_ids) kept_ids->clear();
  for (const Arc& a : arcs_) {
    if (is_deleted(deleted, a.id)) continue;
    r.add_arc(a.tail, a.head, a.weight);
    if (kept_ids) kept_ids->push_back(a.id);
  }
  return r;
}

DeletionSet::DeletionSet(std::vector<ArcId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool DeletionSet::contains(ArcId id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }

void DeletionSet::insert(ArcId id) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) ids_.insert(it, id);
}

DeletionSet DeletionSet::united(const DeletionSet& other) const {
  std::vector<ArcId> merged;
  merged.reserve(ids_.size() + other.ids_.size());
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(), std::back_inserter(merged));
  DeletionSet r;
  r.ids_ = std::move(merged);
  return r;
}

ArcMask DeletionSet::to_mask(int arc_count) const {
  ArcMask m(static_cast<std::size_t>(arc_count), false);
  for (ArcId a : ids_) {
    if (a < 0 || a >= arc_count) throw InputError("unknown arc id " + std::to_string(a));
    m[static_cast<std::size_t>(a)] = true;
  }
  return m;
}

// ---------------------------------------------------------------------------

std::optional<int> negative_cycle_min_length(const WeightedDigraph& g, const ArcMask& deleted) {
  const int n = g.vertex_count();
  if (n == 0) return std::nullopt;
  // Walks with at most one arc: the diagonal 0 lets shorter walks pad out.
  Matrix base(static_cast<std::size_t>(n) * n, kInf);
  for (int i = 0; i < n; ++i) base[i * n + i] = 0;
  for (const Arc& a : g.arcs()) {
    if (is_deleted(deleted, a.id)) continue;
    Weight& e = base[a.tail * n + a.head];
    e = std::min(e, a.weight);
  }
  std::vector<Matrix> powers{base};
  int span = 1;
  while (!negative_diagonal(powers.back(), n)) {
    if (span >= n) return std::nullopt;
    powers.push_back(min_plus(powers.back(), powers.back(), n));
    span *= 2;
  }
  // Largest length without a negative closed walk, assembled from powers.
  Matrix acc(static_cast<std::size_t>(n) * n, kInf);
  for (int i = 0; i < n; ++i) acc[i * n + i] = 0;
  int length = 0;
  for (int j = static_cast<int>(powers.size()) - 2; j >= 0; --j) {
    Matrix cand = min_plus(acc, powers[static_cast<std::size_t>(j)], n);
    if (!negative_diagonal(cand, n)) {
      acc = std::move(cand);
      length += 1 << j;
    }
  }
  return length + 1;
}

bool has_negative_cycle_floyd_warshall(const WeightedDigraph& g, const ArcMask& deleted) {
  const int n = g.vertex_count();
  Matrix d(static_cast<std::size_t>(n) * n, kInf);
  for (int i = 0; i < n; ++i) d[i * n + i] = 0;
  for (const Arc& a : g.arcs()) {
    if (is_deleted(deleted, a.id)) continue;
    Weight& e = d[a.tail * n + a.head];
    e = std::min(e, a.weight);
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      const Weight dik = d[i * n + k];
      if (dik >= kInf) continue;
      for (int j = 0; j < n; ++j) {
        const Weight dkj = d[k * n + j];
        if (dkj >= kInf) continue;
        d[i * n + j] = std::min(d[i * n + j], dik + dkj);
      }
      if (d[i * n + i] < 0) return true;
    }
  }
  return negative_diagonal(d, n);
}

std::optional<Cycle> shortest_negative_cycle(const WeightedDigraph& g) {
  return shortest_negative_cycle(g, {});
}

namespace {

std::optional<Cycle> shortest_in_component(const WeightedDigraph& g, const ArcMask& deleted) {
  const std::optional<int> min_len = negative_cycle_min_length(g, deleted);
  if (!min_len) return std::nullopt;
  const int len = *min_len;
  const int n = g.vertex_count();

  // A negative closed walk of minimum length is a simple cycle, so it suffices
  // to find the lexicographically smallest negative closed walk of length
  // `len` whose first arc is its smallest arc.
  std::vector<std::vector<Weight>> best(static_cast<std::size_t>(len), std::vector<Weight>(static_cast<std::size_t>(n)));
  for (const Arc& first : g.arcs()) {
    if (is_deleted(deleted, first.id)) continue;
    const Vertex start = first.tail;
    auto allowed = [&](ArcId b) { return b > first.id && !is_deleted(deleted, b); };
    // best[r][v]: minimum weight of a walk with exactly r allowed arcs from v to start.
    std::fill(best[0].begin(), best[0].end(), kInf);
    best[0][static_cast<std::size_t>(start)] = 0;
    for (int r = 1; r < len; ++r) {
      auto& row = best[static_cast<std::size_t>(r)];
      const auto& prev = best[static_cast<std::size_t>(r - 1)];
      std::fill(row.begin(), row.end(), kInf);
      for (Vertex v = 0; v < n; ++v) {
        for (ArcId b : g.out_arcs(v)) {
          if (!allowed(b)) continue;
          const Arc& arc = g.arc(b);
          const Weight rest = prev[static_cast<std::size_t>(arc.head)];
          if (rest >= kInf) continue;
          row[static_cast<std::size_t>(v)] = std::min(row[static_cast<std::size_t>(v)], arc.weight + rest);
        }
      }
    }
    const Weight tail_best = best[static_cast<std::size_t>(len - 1)][static_cast<std::size_t>(first.head)];
    if (tail_best >= kInf || first.weight + tail_best >= 0) continue;

    Cycle c;
    c.arc_ids.push_back(first.id);
    c.weight = first.weight;
    Vertex cur = first.head;
    for (int remaining = len - 1; remaining > 0; --remaining) {
      const auto& next_best = best[static_cast<std::size_t>(remaining - 1)];
      ArcId pick = -1;
      for (ArcId b : g.out_arcs(cur)) {
        if (!allowed(b)) continue;
        const Arc& arc = g.arc(b);
        const Weight rest = next_best[static_cast<std::size_t>(arc.head)];
        if (rest >= kInf) continue;
        if (c.weight + arc.weight + rest < 0 && (pick < 0 || b < pick)) pick = b;
      }
      // Unreachable: best[] guarantees a continuation exists.
      if (pick < 0) throw std::logic_error("negative cycle recovery lost its continuation");
      c.arc_ids.push_back(pick);
      c.weight += g.arc(pick).weight;
      cur = g.arc(pick).head;
    }
    c.length = len;
    return c;
  }
  throw std::logic_error("negative cycle length reported but no cycle recovered");
}

}  // namespace

std::optional<Cycle> shortest_negative_cycle(const WeightedDigraph& g, const ArcMask& deleted) {
  // Cycles live inside strong components; solve each one on its own induced
  // subgraph. Arcs keep their relative id order, so the tie-break carries over.
  std::optional<Cycle> best;
  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (const auto& comp : strong_components(g, deleted)) {
    if (comp.size() < 2) continue;
    for (std::size_t i = 0; i < comp.size(); ++i) local[static_cast<std::size_t>(comp[i])] = static_cast<int>(i);
    WeightedDigraph sub(static_cast<int>(comp.size()));
    std::vector<ArcId> original;
    for (const Arc& a : g.arcs()) {
      if (is_deleted(deleted, a.id)) continue;
      const int lt = local[static_cast<std::size_t>(a.tail)];
      const int lh = local[static_cast<std::size_t>(a.head)];
      if (lt < 0 || lh < 0) continue;
      sub.add_arc(lt, lh, a.weight);
      original.push_back(a.id);
    }
    for (Vertex v : comp) local[static_cast<std::size_t>(v)] = -1;
    auto c = shortest_in_component(sub, {});
    if (!c) continue;
    for (ArcId& a : c->arc_ids) a = original[static_cast<std::size_t>(a)];
    if (!best || c->length < best->length || (c->length == best->length && c->arc_ids < best->arc_ids)) best = std::move(c);
  }
  return best;
}

std::optional<Potential> build_feasible_potential(const WeightedDigraph& g) {
  return build_feasible_potential(g, {});
}

std::optional<Potential> build_feasible_potential(const WeightedDigraph& g, const ArcMask& deleted) {
  const int n = g.vertex_count();
  // Distances from the virtual source start at 0 through its weight-0 arcs.
  Potential pi{std::vector<Weight>(static_cast<std::size_t>(n), 0)};
  for (int round = 0; round <= n; ++round) {
    bool changed = false;
    for (const Arc& a : g.arcs()) {
      if (is_deleted(deleted, a.id)) continue;
      const Weight cand = pi.values[static_cast<std::size_t>(a.tail)] + a.weight;
      if (cand < pi.values[static_cast<std::size_t>(a.head)]) {
        pi.values[static_cast<std::size_t>(a.head)] = cand;
        changed = true;
      }
    }
    if (!changed) return pi;
  }
  return std::nullopt;
}

bool is_feasible_potential(const WeightedDigraph& g, const ArcMask& deleted, const Potential& pi) {
  if (pi.values.size() != static_cast<std::size_t>(g.vertex_count())) return false;
  for (const Arc& a : g.arcs()) {
    if (is_deleted(deleted, a.id)) continue;
    if (pi.values[static_cast<std::size_t>(a.tail)] - pi.values[static_cast<std::size_t>(a.head)] + a.weight < 0)
      return false;
  }
  return true;
}

VerifyReport verify_solution(const WeightedDigraph& g, const DeletionSet& s, int k) {
  const ArcMask mask = s.to_mask(g.arc_count());
  VerifyReport r;
  r.size_ok = static_cast<int>(s.size()) <= k;
  r.certificate = build_feasible_potential(g, mask);
  r.acyclic_of_negatives = r.certificate.has_value();
  return r;
}

std::vector<std::vector<Vertex>> strong_components(const WeightedDigraph& g) { return strong_components(g, {}); }

std::vector<std::vector<Vertex>> strong_components(const WeightedDigraph& g, const ArcMask& deleted) {
  const int n = g.vertex_count();
  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> comps;
  int counter = 0;

  // Iterative Tarjan: frames hold (vertex, next out-arc position).
  std::vector<std::pair<Vertex, std::size_t>> frames;
  for (Vertex root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] >= 0) continue;
    frames.emplace_back(root, 0);
    index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
    stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto outs = g.out_arcs(v);
      if (pos < outs.size()) {
        const ArcId a = outs[pos++];
        if (is_deleted(deleted, a)) continue;
        const Vertex w = g.arc(a).head;
        if (index[static_cast<std::size_t>(w)] < 0) {
          index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = counter++;
          stack.push_back(w);
          on_stack[static_cast<std::size_t>(w)] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[static_cast<std::size_t>(w)]) {
          low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
        }
        continue;
      }
      const Vertex done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const Vertex parent = frames.back().first;
        low[static_cast<std::size_t>(parent)] =
            std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(done)]);
      }
      if (low[static_cast<std::size_t>(done)] == index[static_cast<std::size_t>(done)]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = false;
          comp.push_back(w);
        } while (w != done);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
    }
  }
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

std::vector<bool> reachable_from(const WeightedDigraph& g, const ArcMask& deleted, std::span<const Vertex> sources) {
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  std::vector<Vertex> stack;
  for (Vertex s : sources) {
    if (!seen[static_cast<std::size_t>(s)]) {
      seen[static_cast<std::size_t>(s)] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (ArcId a : g.out_arcs(v)) {
      if (is_deleted(deleted, a)) continue;
      const Vertex h = g.arc(a).head;
      if (!seen[static_cast<std::size_t>(h)]) {
        seen[static_cast<std::size_t>(h)] = true;
        stack.push_back(h);
      }
    }
  }
  return seen;
}

}  // namespace ndfas
