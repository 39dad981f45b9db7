#include "thresh/exact.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "thresh/errors.hpp"
#include "thresh/monopoly.hpp"

namespace thresh {

namespace {

using Mask = std::uint64_t;

constexpr std::size_t kMaskLimit = 64;

Mask bit(NodeId v) { return Mask{1} << v; }

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.num_nodes(), 0);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    for (NodeId u : g.neighbors(v)) adj[v] |= bit(u);
  }
  return adj;
}

std::vector<std::size_t> quotas(const Graph& g, const ThresholdRule& rule) {
  std::vector<std::size_t> q(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) q[v] = blue_quota(rule, g.degree(v));
  return q;
}

NodeSet to_node_set(std::size_t n, Mask mask) {
  NodeSet s(n);
  while (mask != 0) {
    s.insert(static_cast<NodeId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return s;
}

void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (cap > kMaskLimit) throw PreconditionError("solver caps above 64 nodes are not supported");
  if (n > cap) {
    throw PreconditionError(std::string(what) + ": n=" + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(cap));
  }
}

// Calls visit(indices) for every k-subset of 0..n-1 in lexicographic order
// until visit returns true. Returns whether it did.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return false;
  std::vector<NodeId> idx(k);
  std::iota(idx.begin(), idx.end(), NodeId{0});
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

ExactResult infeasible(SolveMethod method, std::size_t n, std::uint64_t explored = 0) {
  ExactResult out;
  out.feasible = false;
  out.method = method;
  out.witness = NodeSet(n);
  out.nodes_explored = explored;
  return out;
}

ExactResult found(SolveMethod method, NodeSet witness, std::uint64_t explored) {
  ExactResult out;
  out.feasible = true;
  out.optimum = witness.size();
  out.witness = std::move(witness);
  out.method = method;
  out.nodes_explored = explored;
  return out;
}

// Depth-first completion of a partial stable set. Some member is short of
// its quota, so one of its free neighbors must join; branching over them in
// order and excluding the ones already tried covers every superset once.
class StableSearch {
 public:
  StableSearch(std::vector<Mask> adj, std::vector<std::size_t> quota)
      : adj_(std::move(adj)), quota_(std::move(quota)) {}

  std::optional<Mask> find(Mask members, Mask excluded, std::size_t limit) {
    ++explored_;
    const std::size_t size = static_cast<std::size_t>(std::popcount(members));
    std::size_t worst_deficit = 0;
    NodeId pivot = 0;
    std::size_t pivot_options = kMaskLimit + 1;
    for (Mask rest = members; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<NodeId>(std::countr_zero(rest));
      const auto have = static_cast<std::size_t>(std::popcount(adj_[v] & members));
      if (have >= quota_[v]) continue;
      const std::size_t deficit = quota_[v] - have;
      const auto options = static_cast<std::size_t>(std::popcount(adj_[v] & ~members & ~excluded));
      if (options < deficit) return std::nullopt;
      worst_deficit = std::max(worst_deficit, deficit);
      if (options < pivot_options) {
        pivot_options = options;
        pivot = v;
      }
    }
    if (worst_deficit == 0) return members;
    if (size + worst_deficit > limit) return std::nullopt;
    Mask choices = adj_[pivot] & ~members & ~excluded;
    while (choices != 0) {
      const auto u = static_cast<NodeId>(std::countr_zero(choices));
      choices &= choices - 1;
      if (auto hit = find(members | bit(u), excluded, limit)) return hit;
      excluded |= bit(u);
    }
    return std::nullopt;
  }

  std::uint64_t explored() const { return explored_; }

 private:
  std::vector<Mask> adj_;
  std::vector<std::size_t> quota_;
  std::uint64_t explored_ = 0;
};

class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<Mask> adj) : adj_(std::move(adj)) {}

  Mask solve() {
    const std::size_t n = adj_.size();
    expand(0, n == kMaskLimit ? ~Mask{0} : bit(static_cast<NodeId>(n)) - 1);
    return best_;
  }

  std::uint64_t explored() const { return explored_; }

 private:
  // Greedy sequential coloring of the candidates; a clique inside the
  // first i vertices of `order` has at most colors[i] members.
  void color_sort(Mask candidates, std::vector<NodeId>& order, std::vector<std::size_t>& colors) const {
    order.clear();
    colors.clear();
    std::size_t color = 0;
    Mask uncolored = candidates;
    while (uncolored != 0) {
      ++color;
      Mask available = uncolored;
      while (available != 0) {
        const auto v = static_cast<NodeId>(std::countr_zero(available));
        available &= ~bit(v) & ~adj_[v];
        uncolored &= ~bit(v);
        order.push_back(v);
        colors.push_back(color);
      }
    }
  }

  void expand(Mask clique, Mask candidates) {
    ++explored_;
    std::vector<NodeId> order;
    std::vector<std::size_t> colors;
    color_sort(candidates, order, colors);
    const auto size = static_cast<std::size_t>(std::popcount(clique));
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + colors[i] <= best_size_) return;
      const NodeId v = order[i];
      const Mask grown = clique | bit(v);
      const Mask next = candidates & adj_[v];
      if (next == 0) {
        if (size + 1 > best_size_) {
          best_size_ = size + 1;
          best_ = grown;
        }
      } else {
        expand(grown, next);
      }
      candidates &= ~bit(v);
    }
  }

  std::vector<Mask> adj_;
  Mask best_ = 0;
  std::size_t best_size_ = 0;
  std::uint64_t explored_ = 0;
};

}  // namespace

std::string_view to_string(SolveMethod method) {
  switch (method) {
    case SolveMethod::Enumeration: return "enumeration";
    case SolveMethod::BranchAndBound: return "branch_and_bound";
    case SolveMethod::ShortcutMs1: return "shortcut_ms1";
    case SolveMethod::ShortcutGirth: return "shortcut_girth";
  }
  return "?";
}

ExactResult min_stable_set_enumeration(const Graph& g, const ThresholdRule& rule, std::size_t cap) {
  validate(rule);
  const std::size_t n = g.num_nodes();
  check_cap(n, cap, "min_stable_set enumeration");
  if (n == 0) return infeasible(SolveMethod::Enumeration, n);
  if (const auto* r = std::get_if<RThreshold>(&rule); r != nullptr && g.max_degree() < r->r) {
    return infeasible(SolveMethod::Enumeration, n);
  }
  const auto adj = adjacency_masks(g);
  const auto quota = quotas(g, rule);
  std::uint64_t explored = 0;
  Mask hit = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const bool done = for_each_subset(n, k, [&](const std::vector<NodeId>& idx) {
      ++explored;
      Mask s = 0;
      for (NodeId v : idx) s |= bit(v);
      for (NodeId v : idx) {
        if (static_cast<std::size_t>(std::popcount(adj[v] & s)) < quota[v]) return false;
      }
      hit = s;
      return true;
    });
    if (done) return found(SolveMethod::Enumeration, to_node_set(n, hit), explored);
  }
  return infeasible(SolveMethod::Enumeration, n, explored);
}

ExactResult min_stable_set_branch_and_bound(const Graph& g, const ThresholdRule& rule, std::size_t cap) {
  validate(rule);
  const std::size_t n = g.num_nodes();
  check_cap(n, cap, "min_stable_set branch and bound");
  StableSearch search(adjacency_masks(g), quotas(g, rule));
  // Iterative deepening on the size limit; the root is the lowest member, so
  // every lower id is excluded up front.
  for (std::size_t limit = 1; limit <= n; ++limit) {
    for (NodeId root = 0; root < n; ++root) {
      const Mask below = bit(root) - 1;
      if (auto hit = search.find(bit(root), below, limit)) {
        return found(SolveMethod::BranchAndBound, to_node_set(n, *hit), search.explored());
      }
    }
  }
  return infeasible(SolveMethod::BranchAndBound, n, search.explored());
}

ExactResult min_stable_set(const Graph& g, const ThresholdRule& rule, const ExactOptions& options) {
  validate(rule);
  const std::size_t n = g.num_nodes();
  if (const auto* r = std::get_if<RThreshold>(&rule); r != nullptr && options.use_shortcuts) {
    if (r->r == 1) {
      if (g.num_edges() == 0) return infeasible(SolveMethod::ShortcutMs1, n);
      const Edge e = g.edges().front();
      const std::vector<NodeId> pair{e.first, e.second};
      return found(SolveMethod::ShortcutMs1, NodeSet(n, pair), 1);
    }
    if (r->r == 2) {
      auto cycle = shortest_cycle(g);
      if (!cycle) return infeasible(SolveMethod::ShortcutGirth, n, n);
      return found(SolveMethod::ShortcutGirth, NodeSet(n, *cycle), n);
    }
  }
  if (n <= options.enumeration_cap) return min_stable_set_enumeration(g, rule, options.enumeration_cap);
  return min_stable_set_branch_and_bound(g, rule, options.search_cap);
}

ExactResult min_target_set(const Graph& g, const ThresholdRule& rule, const ExactOptions& options) {
  validate(rule);
  const std::size_t n = g.num_nodes();
  check_cap(n, options.enumeration_cap, "min_target_set");
  if (n == 0) return infeasible(SolveMethod::Enumeration, n);
  if (const auto* r = std::get_if<RThreshold>(&rule); r != nullptr && g.min_degree() < r->r) {
    return infeasible(SolveMethod::Enumeration, n);
  }
  std::uint64_t explored = 0;
  NodeSet hit;
  for (std::size_t k = 1; k <= n; ++k) {
    const bool done = for_each_subset(n, k, [&](const std::vector<NodeId>& idx) {
      ++explored;
      NodeSet t(n, idx);
      if (!verify_target(g, t, rule)) return false;
      hit = std::move(t);
      return true;
    });
    if (done) return found(SolveMethod::Enumeration, std::move(hit), explored);
  }
  return infeasible(SolveMethod::Enumeration, n, explored);
}

ExactResult max_clique(const Graph& g, const ExactOptions& options) {
  const std::size_t n = g.num_nodes();
  check_cap(n, options.clique_cap, "max_clique");
  if (n == 0) return infeasible(SolveMethod::BranchAndBound, n);
  CliqueSearch search(adjacency_masks(g));
  const Mask best = search.solve();
  return found(SolveMethod::BranchAndBound, to_node_set(n, best), search.explored());
}

}  // namespace thresh
