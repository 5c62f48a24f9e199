#include "ndfas/dp.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>

#include "ndfas/skew.hpp"

namespace ndfas {

namespace {

constexpr int kUnset = std::numeric_limits<int>::max();

// All bag partitions of one size, as block-per-position vectors.
struct PartitionList {
  std::vector<std::vector<int>> parts;
  std::unordered_map<std::uint64_t, int> index;

  static std::uint64_t code(const std::vector<int>& block_of) {
    std::uint64_t c = 0;
    for (int b : block_of) c = c * 16 + static_cast<std::uint64_t>(b);
    return c;
  }
  int find(const std::vector<int>& block_of) const { return index.at(code(block_of)); }
};

PartitionList make_partitions(int size, PartitionFamily family) {
  PartitionList list;
  if (family == PartitionFamily::Singleton) {
    list.parts.emplace_back(static_cast<std::size_t>(size), 0);
  } else {
    for_each_ordered_partition(
        size,
        [&](const std::vector<int>& block_of, int) {
          list.parts.push_back(block_of);
          return false;
        },
        size);
  }
  for (std::size_t i = 0; i < list.parts.size(); ++i) list.index.emplace(PartitionList::code(list.parts[i]), static_cast<int>(i));
  return list;
}

// Drops position `pos` and renumbers the remaining blocks densely.
std::vector<int> project_partition(const std::vector<int>& block_of, std::size_t pos) {
  std::vector<int> out;
  out.reserve(block_of.size() - 1);
  for (std::size_t i = 0; i < block_of.size(); ++i) {
    if (i != pos) out.push_back(block_of[i]);
  }
  std::vector<int> present(out);
  std::sort(present.begin(), present.end());
  present.erase(std::unique(present.begin(), present.end()), present.end());
  for (int& b : out) b = static_cast<int>(std::lower_bound(present.begin(), present.end(), b) - present.begin());
  return out;
}

// An arc inside a bag, by bag positions.
struct LocalArc {
  ArcId id;
  std::size_t tail;
  std::size_t head;
  Weight weight;
};

std::vector<LocalArc> arcs_inside(const WeightedDigraph& g, const std::vector<Vertex>& bag,
                                  const std::vector<int>& pos_of, Vertex only = -1) {
  std::vector<LocalArc> out;
  for (Vertex v : bag) {
    for (ArcId a : g.out_arcs(v)) {
      const Arc& arc = g.arc(a);
      const int h = pos_of[static_cast<std::size_t>(arc.head)];
      if (h < 0) continue;
      if (only >= 0 && arc.tail != only && arc.head != only) continue;
      out.push_back(LocalArc{a, static_cast<std::size_t>(pos_of[static_cast<std::size_t>(v)]), static_cast<std::size_t>(h), arc.weight});
    }
  }
  return out;
}

class Engine {
 public:
  Engine(const WeightedDigraph& g, const NiceTreeDecomposition& nice, PartitionFamily family, Weight a, Weight b,
         const DpOptions& opts)
      : g_(g), nice_(nice), family_(family), a_(a), range_(b - a + 1), opts_(opts) {
    if (b < a) throw InputError("empty potential range");
    const int largest = nice.width() + 1;
    if (largest > opts.bag_cap) {
      throw ResourceError("bag size " + std::to_string(largest) + " exceeds the cap of " + std::to_string(opts.bag_cap),
                          dp_key_count(largest, family, a, b));
    }
    const double keys = dp_key_count(largest, family, a, b);
    if (keys > opts.key_budget) {
      throw ResourceError("DP table would need " + std::to_string(static_cast<long long>(keys)) + " keys per node", keys);
    }
    for (int s = 0; s <= largest; ++s) partitions_.push_back(make_partitions(s, family));
    pow_.assign(static_cast<std::size_t>(largest) + 2, 1);
    for (std::size_t i = 1; i < pow_.size(); ++i) pow_[i] = pow_[i - 1] * static_cast<std::uint64_t>(range_);
    pos_of_.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  }

  DpResult run() {
    const std::size_t t = nice_.nodes.size();
    std::vector<std::vector<int>> size(t);
    back_.assign(t, {});
    long long entries = 0;
    for (std::size_t x = 0; x < t; ++x) {
      const NiceNode& node = nice_.nodes[x];
      size[x].assign(key_count(node.bag.size()), kUnset);
      entries += static_cast<long long>(size[x].size());
      switch (node.kind) {
        case NiceKind::Leaf:
          size[x][0] = 0;
          break;
        case NiceKind::Introduce:
          introduce(node, size[static_cast<std::size_t>(node.children[0])], size[x]);
          break;
        case NiceKind::Forget:
          forget(node, nice_.nodes[static_cast<std::size_t>(node.children[0])], size[static_cast<std::size_t>(node.children[0])], size[x], back_[x]);
          break;
        case NiceKind::Join:
          join(node, size[static_cast<std::size_t>(node.children[0])], size[static_cast<std::size_t>(node.children[1])], size[x]);
          break;
      }
      for (int c : node.children) std::vector<int>().swap(size[static_cast<std::size_t>(c)]);
    }
    DpResult result = reconstruct();
    if (static_cast<int>(result.set.size()) != size[static_cast<std::size_t>(nice_.root)][0])
      throw std::logic_error("DP reconstruction disagrees with the table");
    result.table_entries = entries;
    return result;
  }

 private:
  std::size_t key_count(std::size_t s) const { return partitions_[s].parts.size() * pow_[s]; }

  Weight digit(std::uint64_t pi_index, std::size_t pos) const {
    return static_cast<Weight>((pi_index / pow_[pos]) % static_cast<std::uint64_t>(range_));
  }

  // Index without position `pos`.
  std::uint64_t drop_digit(std::uint64_t pi_index, std::size_t pos) const {
    return pi_index % pow_[pos] + pi_index / pow_[pos + 1] * pow_[pos];
  }

  bool violates(const LocalArc& arc, const std::vector<int>& block_of, std::uint64_t pi_index) const {
    const int bt = block_of[arc.tail];
    const int bh = block_of[arc.head];
    if (bt != bh) return bh < bt;
    return digit(pi_index, arc.tail) - digit(pi_index, arc.head) + arc.weight < 0;
  }

  void set_positions(const std::vector<Vertex>& bag) {
    for (std::size_t i = 0; i < bag.size(); ++i) pos_of_[static_cast<std::size_t>(bag[i])] = static_cast<int>(i);
  }
  void clear_positions(const std::vector<Vertex>& bag) {
    for (Vertex v : bag) pos_of_[static_cast<std::size_t>(v)] = -1;
  }

  std::size_t position(const std::vector<Vertex>& bag, Vertex v) const {
    return static_cast<std::size_t>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
  }

  void introduce(const NiceNode& node, const std::vector<int>& child, std::vector<int>& out) {
    const std::size_t s = node.bag.size();
    const std::size_t pv = position(node.bag, node.vertex);
    set_positions(node.bag);
    const auto arcs = arcs_inside(g_, node.bag, pos_of_, node.vertex);
    clear_positions(node.bag);
    const auto& parts = partitions_[s].parts;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      const std::uint64_t child_p = static_cast<std::uint64_t>(partitions_[s - 1].find(project_partition(parts[p], pv)));
      for (std::uint64_t pi = 0; pi < pow_[s]; ++pi) {
        int charged = 0;
        for (const LocalArc& arc : arcs) charged += violates(arc, parts[p], pi) ? 1 : 0;
        out[p * pow_[s] + pi] = child[child_p * pow_[s - 1] + drop_digit(pi, pv)] + charged;
      }
    }
  }

  void forget(const NiceNode& node, const NiceNode& child_node, const std::vector<int>& child, std::vector<int>& out,
              std::vector<std::uint32_t>& back) {
    const std::size_t s = child_node.bag.size();
    const std::size_t pv = position(child_node.bag, node.vertex);
    back.assign(out.size(), 0);
    const auto& parts = partitions_[s].parts;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      const std::uint64_t parent_p = static_cast<std::uint64_t>(partitions_[s - 1].find(project_partition(parts[p], pv)));
      for (std::uint64_t pi = 0; pi < pow_[s]; ++pi) {
        const std::uint64_t from = p * pow_[s] + pi;
        const std::uint64_t to = parent_p * pow_[s - 1] + drop_digit(pi, pv);
        // Child keys are scanned in increasing order, so ties keep the lowest key.
        if (child[from] < out[to]) {
          out[to] = child[from];
          back[to] = static_cast<std::uint32_t>(from);
        }
      }
    }
  }

  void join(const NiceNode& node, const std::vector<int>& left, const std::vector<int>& right, std::vector<int>& out) {
    const std::size_t s = node.bag.size();
    set_positions(node.bag);
    const auto arcs = arcs_inside(g_, node.bag, pos_of_);
    clear_positions(node.bag);
    const auto& parts = partitions_[s].parts;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      for (std::uint64_t pi = 0; pi < pow_[s]; ++pi) {
        int shared = 0;
        for (const LocalArc& arc : arcs) shared += violates(arc, parts[p], pi) ? 1 : 0;
        const std::uint64_t key = p * pow_[s] + pi;
        out[key] = left[key] + right[key] - shared;
      }
    }
  }

  DpResult reconstruct() {
    const int n = g_.vertex_count();
    DpResult result;
    result.witness.potential.values.assign(static_cast<std::size_t>(n), a_);
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      return v;
    };
    std::vector<std::pair<Vertex, Vertex>> before;  // (u, v): block(u) < block(v)
    std::vector<ArcId> chosen;

    std::vector<std::pair<int, std::uint64_t>> stack{{nice_.root, 0}};
    while (!stack.empty()) {
      auto [x, key] = stack.back();
      stack.pop_back();
      const NiceNode& node = nice_.nodes[static_cast<std::size_t>(x)];
      const std::size_t s = node.bag.size();
      const std::vector<int>& block_of = partitions_[s].parts[key / pow_[s]];
      const std::uint64_t pi = key % pow_[s];
      for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
          if (block_of[i] == block_of[j] && i < j) parent[static_cast<std::size_t>(find(node.bag[i]))] = find(node.bag[j]);
          if (block_of[i] < block_of[j]) before.emplace_back(node.bag[i], node.bag[j]);
        }
      }
      switch (node.kind) {
        case NiceKind::Leaf:
          break;
        case NiceKind::Introduce: {
          const std::size_t pv = position(node.bag, node.vertex);
          set_positions(node.bag);
          for (const LocalArc& arc : arcs_inside(g_, node.bag, pos_of_, node.vertex)) {
            if (violates(arc, block_of, pi)) chosen.push_back(arc.id);
          }
          clear_positions(node.bag);
          const std::uint64_t child_p = static_cast<std::uint64_t>(partitions_[s - 1].find(project_partition(block_of, pv)));
          stack.emplace_back(node.children[0], child_p * pow_[s - 1] + drop_digit(pi, pv));
          break;
        }
        case NiceKind::Forget: {
          const std::uint64_t child_key = back_[static_cast<std::size_t>(x)][key];
          const NiceNode& child = nice_.nodes[static_cast<std::size_t>(node.children[0])];
          const std::size_t cs = child.bag.size();
          const std::size_t pv = position(child.bag, node.vertex);
          result.witness.potential.values[static_cast<std::size_t>(node.vertex)] = a_ + digit(child_key % pow_[cs], pv);
          stack.emplace_back(node.children[0], child_key);
          break;
        }
        case NiceKind::Join:
          stack.emplace_back(node.children[0], key);
          stack.emplace_back(node.children[1], key);
          break;
      }
    }
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    result.set = DeletionSet(chosen);

    if (family_ == PartitionFamily::Singleton) {
      result.witness.blocks = n > 0 ? 1 : 0;
      result.witness.block_of.assign(static_cast<std::size_t>(n), 0);
      return result;
    }
    // One block per equality class, ordered topologically (smallest class first).
    std::vector<int> cls(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) cls[static_cast<std::size_t>(v)] = find(v);
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : before) {
      const int cu = cls[static_cast<std::size_t>(u)], cv = cls[static_cast<std::size_t>(v)];
      if (cu == cv) throw std::logic_error("DP witness orders a block before itself");
      succ[static_cast<std::size_t>(cu)].push_back(cv);
      ++indeg[static_cast<std::size_t>(cv)];
    }
    std::vector<int> ready;
    for (int c = 0; c < n; ++c) {
      if (cls[static_cast<std::size_t>(c)] == c && indeg[static_cast<std::size_t>(c)] == 0) ready.push_back(c);
    }
    std::vector<int> block_of_class(static_cast<std::size_t>(n), -1);
    int next_block = 0;
    while (!ready.empty()) {
      auto it = std::min_element(ready.begin(), ready.end());
      const int c = *it;
      ready.erase(it);
      block_of_class[static_cast<std::size_t>(c)] = next_block++;
      for (int d : succ[static_cast<std::size_t>(c)]) {
        if (--indeg[static_cast<std::size_t>(d)] == 0) ready.push_back(d);
      }
    }
    result.witness.blocks = next_block;
    result.witness.block_of.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      const int b = block_of_class[static_cast<std::size_t>(cls[static_cast<std::size_t>(v)])];
      if (b < 0) throw std::logic_error("DP witness block order is cyclic");
      result.witness.block_of[static_cast<std::size_t>(v)] = b;
    }
    return result;
  }

  const WeightedDigraph& g_;
  const NiceTreeDecomposition& nice_;
  PartitionFamily family_;
  Weight a_;
  Weight range_;
  DpOptions opts_;
  std::vector<PartitionList> partitions_;
  std::vector<std::uint64_t> pow_;
  std::vector<int> pos_of_;
  std::vector<std::vector<std::uint32_t>> back_;
};

void require_unit_weights(const WeightedDigraph& g, const char* name) {
  if (!g.weights_within(-1, 1)) throw InputError(std::string(name) + " needs every weight in {-1,0,1}");
}

std::optional<DeletionSet> run_instantiation(const WeightedDigraph& g, int k, PartitionFamily family, Weight b,
                                             const DpOptions& opts, DpResult* detail) {
  if (k < 0) return std::nullopt;
  const NiceTreeDecomposition nice = make_nice(g, compute_tree_decomposition(g));
  DpResult result = dp_solve(g, nice, family, 0, b, opts);
  const bool fits = static_cast<int>(result.set.size()) <= k;
  std::optional<DeletionSet> out;
  if (fits) out = result.set;
  if (detail) *detail = std::move(result);
  return out;
}

}  // namespace

double dp_key_count(int bag_size, PartitionFamily family, Weight a, Weight b) {
  const double partitions = family == PartitionFamily::Singleton ? 1.0 : ordered_bell(bag_size);
  double keys = partitions;
  for (int i = 0; i < bag_size; ++i) keys *= static_cast<double>(b - a + 1);
  return keys;
}

DpResult dp_solve(const WeightedDigraph& g, const NiceTreeDecomposition& nice, PartitionFamily family, Weight a,
                  Weight b, const DpOptions& opts) {
  if (auto check = validate_decomposition(g, nice); !check) throw InputError("invalid nice decomposition: " + check.reason);
  Engine engine(g, nice, family, a, b, opts);
  return engine.run();
}

bool is_cp_feasible(const WeightedDigraph& g, const DeletionSet& s, const DpWitness& witness) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (witness.block_of.size() != n || witness.potential.values.size() != n) return false;
  for (const Arc& a : g.arcs()) {
    if (s.contains(a.id)) continue;
    const int bt = witness.block_of[static_cast<std::size_t>(a.tail)];
    const int bh = witness.block_of[static_cast<std::size_t>(a.head)];
    if (bt < bh) continue;
    if (bt > bh) return false;
    if (witness.potential.values[static_cast<std::size_t>(a.tail)] - witness.potential.values[static_cast<std::size_t>(a.head)] + a.weight < 0)
      return false;
  }
  return true;
}

std::optional<DeletionSet> solve_tw_wminus(const WeightedDigraph& g, int k, const DpOptions& opts, DpResult* detail) {
  require_unit_weights(g, "dp-tw-wminus");
  return run_instantiation(g, k, PartitionFamily::Singleton, g.w_minus(), opts, detail);
}

std::optional<DeletionSet> solve_tw_wplus(const WeightedDigraph& g, int k, const DpOptions& opts, DpResult* detail) {
  require_unit_weights(g, "dp-tw-wplus");
  return run_instantiation(g, k, PartitionFamily::AllOrderedPartitions, g.w_plus(), opts, detail);
}

std::optional<DeletionSet> solve_td_potential(const WeightedDigraph& g, int k, const DpOptions& opts, DpResult* detail) {
  require_unit_weights(g, "dp-td");
  const int td = compute_treedepth(g).depth;
  if (td >= 62) throw ResourceError("treedepth too large for the potential range", static_cast<double>(td));
  return run_instantiation(g, k, PartitionFamily::Singleton, Weight{1} << td, opts, detail);
}

}  // namespace ndfas
