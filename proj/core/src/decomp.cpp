#include "ndfas/decomp.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace ndfas {

namespace {

using Mask = std::uint32_t;

bool sorted_contains(const std::vector<Vertex>& v, Vertex x) { return std::binary_search(v.begin(), v.end(), x); }

std::vector<Vertex> with_vertex(std::vector<Vertex> bag, Vertex v) {
  bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
  return bag;
}

std::vector<Vertex> without_vertex(std::vector<Vertex> bag, Vertex v) {
  bag.erase(std::find(bag.begin(), bag.end(), v));
  return bag;
}

// Exact treewidth ordering by the subset recurrence
//   TW(S) = min_{v in S} max(TW(S - v), |Q(S - v, v)|),
// where Q(S, v) are the vertices outside S + v reachable from v through S.
std::vector<Vertex> exact_ordering(const UndirectedGraph& h) {
  const int n = static_cast<int>(h.size());
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    for (Vertex u : h[static_cast<std::size_t>(v)]) adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }
  auto q_size = [&](Mask s, int v) {
    Mask seen = Mask{1} << v;
    Mask frontier = seen;
    Mask outside = 0;
    while (frontier) {
      const int u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const Mask nb = adj[static_cast<std::size_t>(u)] & ~seen;
      seen |= nb;
      outside |= nb & ~s;
      frontier |= nb & s;
    }
    return std::popcount(outside);
  };
  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<int> tw(static_cast<std::size_t>(full) + 1, 0);
  std::vector<std::int8_t> last(static_cast<std::size_t>(full) + 1, -1);
  tw[0] = -1;
  for (Mask s = 1; s <= full && s != 0; ++s) {
    int best = std::numeric_limits<int>::max();
    for (Mask rest = s; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const Mask prior = s & ~(Mask{1} << v);
      const int cand = std::max(tw[prior], q_size(prior, v));
      if (cand < best) {
        best = cand;
        last[s] = static_cast<std::int8_t>(v);
      }
    }
    tw[s] = best;
    if (s == full) break;
  }
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  Mask s = full;
  for (int i = n - 1; i >= 0; --i) {
    const int v = last[s];
    order[static_cast<std::size_t>(i)] = v;
    s &= ~(Mask{1} << v);
  }
  return order;
}

std::vector<std::vector<Vertex>> components_of(const UndirectedGraph& h, const std::vector<Vertex>& vertices) {
  std::vector<char> in(h.size(), 0), seen(h.size(), 0);
  for (Vertex v : vertices) in[static_cast<std::size_t>(v)] = 1;
  std::vector<std::vector<Vertex>> comps;
  for (Vertex s : vertices) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex u : h[static_cast<std::size_t>(comp[i])]) {
        if (in[static_cast<std::size_t>(u)] && !seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          comp.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

class ExactTreedepth {
 public:
  ExactTreedepth(const UndirectedGraph& h, const std::vector<Vertex>& comp) : comp_(comp) {
    const int c = static_cast<int>(comp.size());
    std::vector<int> local(h.size(), -1);
    for (int i = 0; i < c; ++i) local[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])] = i;
    adj_.assign(static_cast<std::size_t>(c), 0);
    for (int i = 0; i < c; ++i) {
      for (Vertex u : h[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])]) {
        if (local[static_cast<std::size_t>(u)] >= 0) adj_[static_cast<std::size_t>(i)] |= Mask{1} << local[static_cast<std::size_t>(u)];
      }
    }
  }

  int depth(Mask s) {
    if (std::popcount(s) == 1) return 1;
    if (auto it = memo_.find(s); it != memo_.end()) return it->second.first;
    int best = std::numeric_limits<int>::max();
    int best_root = -1;
    for (Mask rest = s; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      int worst = 0;
      for (Mask c : split(s & ~(Mask{1} << v))) {
        worst = std::max(worst, depth(c));
        if (1 + worst >= best) break;
      }
      if (1 + worst < best) {
        best = 1 + worst;
        best_root = v;
      }
    }
    memo_.emplace(s, std::make_pair(best, best_root));
    return best;
  }

  void build(Mask s, Vertex parent, std::vector<Vertex>& out) {
    depth(s);
    const int root = std::popcount(s) == 1 ? std::countr_zero(s) : memo_.at(s).second;
    const Vertex v = comp_[static_cast<std::size_t>(root)];
    out[static_cast<std::size_t>(v)] = parent;
    for (Mask c : split(s & ~(Mask{1} << root))) build(c, v, out);
  }

  Mask all() const { return comp_.size() == 32 ? ~Mask{0} : (Mask{1} << comp_.size()) - 1; }

 private:
  std::vector<Mask> split(Mask s) const {
    std::vector<Mask> parts;
    while (s) {
      Mask comp = s & (~s + 1);
      Mask frontier = comp;
      while (frontier) {
        const int u = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const Mask nb = adj_[static_cast<std::size_t>(u)] & s & ~comp;
        comp |= nb;
        frontier |= nb;
      }
      parts.push_back(comp);
      s &= ~comp;
    }
    return parts;
  }

  std::vector<Vertex> comp_;
  std::vector<Mask> adj_;
  std::unordered_map<Mask, std::pair<int, int>> memo_;
};

// Returns the depth of the forest built below `parent`.
int treedepth_forest(const UndirectedGraph& h, const std::vector<Vertex>& comp, Vertex parent, int exact_cap,
                     std::vector<Vertex>& out, bool& exact) {
  if (static_cast<int>(comp.size()) <= exact_cap) {
    ExactTreedepth solver(h, comp);
    solver.build(solver.all(), parent, out);
    return solver.depth(solver.all());
  }
  exact = false;
  // Heuristic: remove the vertex whose deletion leaves the smallest largest component.
  Vertex pick = -1;
  std::size_t pick_size = std::numeric_limits<std::size_t>::max();
  for (Vertex v : comp) {
    std::size_t largest = 0;
    for (const auto& c : components_of(h, without_vertex(comp, v))) largest = std::max(largest, c.size());
    if (largest < pick_size) {
      pick_size = largest;
      pick = v;
    }
  }
  out[static_cast<std::size_t>(pick)] = parent;
  int deepest = 0;
  for (const auto& c : components_of(h, without_vertex(comp, pick))) {
    deepest = std::max(deepest, treedepth_forest(h, c, pick, exact_cap, out, exact));
  }
  return 1 + deepest;
}

}  // namespace

UndirectedGraph underlying_undirected(const WeightedDigraph& g) {
  UndirectedGraph h(static_cast<std::size_t>(g.vertex_count()));
  for (const Arc& a : g.arcs()) {
    h[static_cast<std::size_t>(a.tail)].push_back(a.head);
    h[static_cast<std::size_t>(a.head)].push_back(a.tail);
  }
  for (auto& nb : h) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return h;
}

int TreeDecomposition::width() const {
  std::size_t largest = 0;
  for (const auto& b : bags) largest = std::max(largest, b.size());
  return static_cast<int>(largest) - 1;
}

int NiceTreeDecomposition::width() const {
  std::size_t largest = 0;
  for (const auto& node : nodes) largest = std::max(largest, node.bag.size());
  return static_cast<int>(largest) - 1;
}

TreeDecomposition NiceTreeDecomposition::as_tree_decomposition() const {
  TreeDecomposition td;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    td.bags.push_back(nodes[i].bag);
    for (int c : nodes[i].children) td.edges.emplace_back(static_cast<int>(i), c);
  }
  return td;
}

std::vector<Vertex> min_fill_ordering(const UndirectedGraph& h) {
  const int n = static_cast<int>(h.size());
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int v = 0; v < n; ++v) {
    for (Vertex u : h[static_cast<std::size_t>(v)]) adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  }
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> order;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    long best_fill = 0;
    int best_degree = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (gone[static_cast<std::size_t>(v)]) continue;
      std::vector<Vertex> nb;
      for (Vertex u = 0; u < n; ++u) {
        if (!gone[static_cast<std::size_t>(u)] && adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) nb.push_back(u);
      }
      long fill = 0;
      for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          if (!adj[static_cast<std::size_t>(nb[i])][static_cast<std::size_t>(nb[j])]) ++fill;
        }
      }
      const int degree = static_cast<int>(nb.size());
      if (pick < 0 || fill < best_fill || (fill == best_fill && degree < best_degree)) {
        pick = v;
        best_fill = fill;
        best_degree = degree;
      }
    }
    std::vector<Vertex> nb;
    for (Vertex u = 0; u < n; ++u) {
      if (!gone[static_cast<std::size_t>(u)] && adj[static_cast<std::size_t>(pick)][static_cast<std::size_t>(u)]) nb.push_back(u);
    }
    for (Vertex a : nb) {
      for (Vertex b : nb) {
        if (a != b) adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
      }
    }
    gone[static_cast<std::size_t>(pick)] = 1;
    order.push_back(pick);
  }
  return order;
}

TreeDecomposition decomposition_from_ordering(const UndirectedGraph& h, const std::vector<Vertex>& order) {
  const int n = static_cast<int>(h.size());
  TreeDecomposition td;
  if (n == 0) {
    td.bags.emplace_back();
    return td;
  }
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  std::vector<std::vector<Vertex>> fill(h);
  std::vector<int> roots;
  td.bags.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[static_cast<std::size_t>(i)];
    std::vector<Vertex> later;
    for (Vertex u : fill[static_cast<std::size_t>(v)]) {
      if (pos[static_cast<std::size_t>(u)] > i) later.push_back(u);
    }
    std::sort(later.begin(), later.end());
    later.erase(std::unique(later.begin(), later.end()), later.end());
    for (Vertex a : later) {
      for (Vertex b : later) {
        if (a != b) fill[static_cast<std::size_t>(a)].push_back(b);
      }
    }
    td.bags[static_cast<std::size_t>(i)] = with_vertex(later, v);
    if (later.empty()) {
      roots.push_back(i);
    } else {
      int parent = n;
      for (Vertex u : later) parent = std::min(parent, pos[static_cast<std::size_t>(u)]);
      td.edges.emplace_back(i, parent);
    }
  }
  for (std::size_t r = 1; r < roots.size(); ++r) td.edges.emplace_back(roots[r - 1], roots[r]);
  return td;
}

TreeDecomposition compute_tree_decomposition(const WeightedDigraph& g, int exact_cap) {
  const UndirectedGraph h = underlying_undirected(g);
  const int n = static_cast<int>(h.size());
  if (n <= std::min(exact_cap, 20) && n > 0) return decomposition_from_ordering(h, exact_ordering(h));
  return decomposition_from_ordering(h, min_fill_ordering(h));
}

NiceTreeDecomposition make_nice(const WeightedDigraph& g, const TreeDecomposition& td) {
  if (auto check = validate_decomposition(g, td); !check) throw InputError("invalid tree decomposition: " + check.reason);
  NiceTreeDecomposition nice;
  const int t = static_cast<int>(td.bags.size());
  std::vector<std::vector<int>> tree(static_cast<std::size_t>(t));
  for (auto [a, b] : td.edges) {
    tree[static_cast<std::size_t>(a)].push_back(b);
    tree[static_cast<std::size_t>(b)].push_back(a);
  }
  auto add = [&](NiceKind kind, Vertex v, std::vector<Vertex> bag, std::vector<int> children) {
    nice.nodes.push_back(NiceNode{kind, v, std::move(bag), std::move(children)});
    return static_cast<int>(nice.nodes.size()) - 1;
  };
  // Moves a node with bag `from` to a chain ending at bag `to`.
  auto morph = [&](int id, const std::vector<Vertex>& to) {
    std::vector<Vertex> bag = nice.nodes[static_cast<std::size_t>(id)].bag;
    const std::vector<Vertex> old = bag;
    for (Vertex v : old) {
      if (!sorted_contains(to, v)) {
        bag = without_vertex(bag, v);
        id = add(NiceKind::Forget, v, bag, {id});
      }
    }
    for (Vertex v : to) {
      if (!sorted_contains(bag, v)) {
        bag = with_vertex(bag, v);
        id = add(NiceKind::Introduce, v, bag, {id});
      }
    }
    return id;
  };
  const int root = t - 1;
  std::function<int(int, int)> build = [&](int x, int parent) {
    const auto& bag = td.bags[static_cast<std::size_t>(x)];
    std::vector<int> tops;
    for (int c : tree[static_cast<std::size_t>(x)]) {
      if (c == parent) continue;
      tops.push_back(morph(build(c, x), bag));
    }
    if (tops.empty()) tops.push_back(morph(add(NiceKind::Leaf, -1, {}, {}), bag));
    int cur = tops[0];
    for (std::size_t i = 1; i < tops.size(); ++i) cur = add(NiceKind::Join, -1, bag, {cur, tops[i]});
    return cur;
  };
  nice.root = morph(build(root, -1), {});
  return nice;
}

TreedepthDecomposition compute_treedepth(const WeightedDigraph& g, int exact_cap) {
  const UndirectedGraph h = underlying_undirected(g);
  TreedepthDecomposition out;
  out.parent.assign(h.size(), -1);
  std::vector<Vertex> all(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) all[i] = static_cast<Vertex>(i);
  for (const auto& comp : components_of(h, all)) {
    out.depth = std::max(out.depth, treedepth_forest(h, comp, -1, std::min(exact_cap, 30), out.parent, out.exact));
  }
  return out;
}

DecompositionCheck validate_decomposition(const WeightedDigraph& g, const TreeDecomposition& td) {
  const int n = g.vertex_count();
  const int t = static_cast<int>(td.bags.size());
  auto fail = [](std::string why) { return DecompositionCheck{false, std::move(why)}; };
  if (t == 0) return fail("no bags");
  if (static_cast<int>(td.edges.size()) != t - 1) return fail("tree needs exactly bags-1 edges");
  std::vector<std::vector<int>> tree(static_cast<std::size_t>(t));
  for (auto [a, b] : td.edges) {
    if (a < 0 || a >= t || b < 0 || b >= t || a == b) return fail("tree edge out of range");
    tree[static_cast<std::size_t>(a)].push_back(b);
    tree[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<char> seen(static_cast<std::size_t>(t), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : tree[static_cast<std::size_t>(x)]) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != t) return fail("decomposition tree is disconnected");
  std::vector<int> occurrences(static_cast<std::size_t>(n), 0);
  for (const auto& bag : td.bags) {
    if (!std::is_sorted(bag.begin(), bag.end()) || std::adjacent_find(bag.begin(), bag.end()) != bag.end())
      return fail("bag is not a sorted set");
    for (Vertex v : bag) {
      if (v < 0 || v >= n) return fail("bag vertex out of range");
      ++occurrences[static_cast<std::size_t>(v)];
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (occurrences[static_cast<std::size_t>(v)] == 0) return fail("vertex " + std::to_string(v) + " is in no bag");
  }
  for (const Arc& a : g.arcs()) {
    bool covered = false;
    for (const auto& bag : td.bags) {
      if (sorted_contains(bag, a.tail) && sorted_contains(bag, a.head)) {
        covered = true;
        break;
      }
    }
    if (!covered) return fail("edge {" + std::to_string(a.tail) + "," + std::to_string(a.head) + "} is in no bag");
  }
  std::vector<int> inner_edges(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : td.edges) {
    const auto& ba = td.bags[static_cast<std::size_t>(a)];
    for (Vertex v : td.bags[static_cast<std::size_t>(b)]) {
      if (sorted_contains(ba, v)) ++inner_edges[static_cast<std::size_t>(v)];
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (inner_edges[static_cast<std::size_t>(v)] != occurrences[static_cast<std::size_t>(v)] - 1)
      return fail("bags containing vertex " + std::to_string(v) + " are not connected");
  }
  return {};
}

DecompositionCheck validate_decomposition(const WeightedDigraph& g, const NiceTreeDecomposition& nice) {
  auto fail = [](std::string why) { return DecompositionCheck{false, std::move(why)}; };
  const int t = static_cast<int>(nice.nodes.size());
  if (nice.root < 0 || nice.root >= t) return fail("root out of range");
  if (!nice.nodes[static_cast<std::size_t>(nice.root)].bag.empty()) return fail("root bag is not empty");
  std::vector<int> parents(static_cast<std::size_t>(t), 0);
  for (int i = 0; i < t; ++i) {
    const NiceNode& x = nice.nodes[static_cast<std::size_t>(i)];
    for (int c : x.children) {
      if (c < 0 || c >= i) return fail("child does not precede its parent");
      ++parents[static_cast<std::size_t>(c)];
    }
    const std::string at = " at node " + std::to_string(i);
    switch (x.kind) {
      case NiceKind::Leaf:
        if (!x.children.empty() || !x.bag.empty()) return fail("leaf must be childless with an empty bag" + at);
        break;
      case NiceKind::Introduce: {
        if (x.children.size() != 1) return fail("introduce needs one child" + at);
        const auto& child = nice.nodes[static_cast<std::size_t>(x.children[0])].bag;
        if (sorted_contains(child, x.vertex) || with_vertex(child, x.vertex) != x.bag)
          return fail("introduce bag mismatch" + at);
        break;
      }
      case NiceKind::Forget: {
        if (x.children.size() != 1) return fail("forget needs one child" + at);
        const auto& child = nice.nodes[static_cast<std::size_t>(x.children[0])].bag;
        if (!sorted_contains(child, x.vertex) || without_vertex(child, x.vertex) != x.bag)
          return fail("forget bag mismatch" + at);
        break;
      }
      case NiceKind::Join:
        if (x.children.size() != 2) return fail("join needs two children" + at);
        for (int c : x.children) {
          if (nice.nodes[static_cast<std::size_t>(c)].bag != x.bag) return fail("join bags differ" + at);
        }
        break;
    }
  }
  for (int i = 0; i < t; ++i) {
    if (parents[static_cast<std::size_t>(i)] != (i == nice.root ? 0 : 1)) return fail("node " + std::to_string(i) + " has a wrong parent count");
  }
  return validate_decomposition(g, nice.as_tree_decomposition());
}

DecompositionCheck validate_decomposition(const WeightedDigraph& g, const TreedepthDecomposition& forest) {
  auto fail = [](std::string why) { return DecompositionCheck{false, std::move(why)}; };
  const int n = g.vertex_count();
  if (static_cast<int>(forest.parent.size()) != n) return fail("parent map has the wrong size");
  std::vector<int> level(static_cast<std::size_t>(n), 0);
  int deepest = 0;
  for (Vertex v = 0; v < n; ++v) {
    int steps = 1;
    for (Vertex u = forest.parent[static_cast<std::size_t>(v)]; u >= 0; u = forest.parent[static_cast<std::size_t>(u)]) {
      if (u >= n || ++steps > n) return fail("parent map is not a forest");
    }
    level[static_cast<std::size_t>(v)] = steps;
    deepest = std::max(deepest, steps);
  }
  auto is_ancestor = [&](Vertex a, Vertex d) {
    for (Vertex u = forest.parent[static_cast<std::size_t>(d)]; u >= 0; u = forest.parent[static_cast<std::size_t>(u)]) {
      if (u == a) return true;
    }
    return false;
  };
  for (const Arc& a : g.arcs()) {
    if (!is_ancestor(a.tail, a.head) && !is_ancestor(a.head, a.tail))
      return fail("edge {" + std::to_string(a.tail) + "," + std::to_string(a.head) + "} is not ancestor-descendant");
  }
  if (deepest != forest.depth) return fail("reported depth differs from the forest depth");
  return {};
}

std::string to_pace(const TreeDecomposition& td, int vertex_count) {
  std::ostringstream os;
  os << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << vertex_count << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    os << "b " << i + 1;
    for (Vertex v : td.bags[i]) os << ' ' << v + 1;
    os << '\n';
  }
  for (auto [a, b] : td.edges) os << a + 1 << ' ' << b + 1 << '\n';
  return os.str();
}

}  // namespace ndfas
