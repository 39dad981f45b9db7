#include "thresh/monopoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "thresh/bounds.hpp"
#include "thresh/errors.hpp"
#include "thresh/rng.hpp"

namespace thresh {

namespace {

constexpr std::size_t kMaxRestarts = 32;

// Local search state: part index per node and d_{P_j}(v) for every node v
// and part j, kept current across moves.
class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, std::size_t part_count, std::size_t min_size, std::uint64_t seed)
      : g_(g), k_(part_count), min_size_(min_size), owner_(g.num_nodes()), sizes_(part_count, 0),
        links_(g.num_nodes() * part_count, 0) {
    const std::size_t n = g.num_nodes();
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    Rng rng(seed);
    rng.shuffle(order);
    // Parts 1..k-1 get exactly min_size nodes; part 0 takes the remainder
    // and starts as the largest.
    std::size_t pos = 0;
    for (std::size_t part = 1; part < k_; ++part) {
      for (std::size_t i = 0; i < min_size_; ++i) assign(order[pos++], part);
    }
    while (pos < n) assign(order[pos++], 0);
    for (NodeId v = 0; v < n; ++v) {
      for (NodeId u : g.neighbors(v)) ++links_[v * k_ + owner_[u]];
    }
    for (NodeId v = 0; v < n; ++v) cut_ += g.degree(v) - link(v, owner_[v]);
    cut_ /= 2;
  }

  std::size_t largest_part() const {
    return static_cast<std::size_t>(std::max_element(sizes_.begin(), sizes_.end()) - sizes_.begin());
  }

  std::size_t link(NodeId v, std::size_t part) const { return links_[v * k_ + part]; }
  std::uint64_t cut() const { return cut_; }

  // Members of `part` with fewer than r neighbors inside it.
  std::vector<NodeId> deficient(std::size_t part, std::size_t r) const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < owner_.size(); ++v) {
      if (owner_[v] == part && link(v, part) < r) out.push_back(v);
    }
    return out;
  }

  // Best destination for v: most neighbors, lowest index on ties, and the
  // move must cut edges and keep the size constraint. nullopt if none.
  std::optional<std::size_t> improving_destination(NodeId v) const {
    const std::size_t from = owner_[v];
    if (!shrink_allowed(from)) return std::nullopt;
    std::optional<std::size_t> best;
    for (std::size_t part = 0; part < k_; ++part) {
      if (part == from || link(v, part) <= link(v, from)) continue;
      if (!best || link(v, part) > link(v, *best)) best = part;
    }
    return best;
  }

  void move(NodeId v, std::size_t to) {
    const std::size_t from = owner_[v];
    cut_ -= link(v, to) - link(v, from);
    --sizes_[from];
    ++sizes_[to];
    owner_[v] = static_cast<std::uint32_t>(to);
    for (NodeId u : g_.neighbors(v)) {
      --links_[u * k_ + from];
      ++links_[u * k_ + to];
    }
  }

  Partition partition() const {
    Partition p;
    p.parts.assign(k_, NodeSet(owner_.size()));
    for (NodeId v = 0; v < owner_.size(); ++v) p.parts[owner_[v]].insert(v);
    p.cut_edges = cut_;
    return p;
  }

 private:
  void assign(NodeId v, std::size_t part) {
    owner_[v] = static_cast<std::uint32_t>(part);
    ++sizes_[part];
  }

  // Removing one node keeps the partition legal: the part stays >= min_size,
  // or drops to min_size - 1 while no other part is that small.
  bool shrink_allowed(std::size_t part) const {
    if (sizes_[part] > min_size_) return true;
    if (sizes_[part] < min_size_ || min_size_ == 0) return false;
    for (std::size_t j = 0; j < k_; ++j) {
      if (j != part && sizes_[j] + 1 == min_size_) return false;
    }
    return true;
  }

  const Graph& g_;
  std::size_t k_;
  std::size_t min_size_;
  std::vector<std::uint32_t> owner_;
  std::vector<std::size_t> sizes_;
  std::vector<std::uint32_t> links_;
  std::uint64_t cut_ = 0;
};

std::vector<std::size_t> internal_degrees(const Graph& g, const NodeSet& s) {
  std::vector<std::size_t> out;
  out.reserve(s.size());
  for (NodeId v : s.members()) out.push_back(degree_in(g, v, s));
  return out;
}

}  // namespace

std::size_t default_max_rounds(const Graph& g) {
  const std::size_t n = g.num_nodes();
  return n * n + 4;
}

StableSetReport construct_stable_set(const Graph& g, std::size_t r, double sigma, std::uint64_t seed) {
  const std::size_t n = g.num_nodes();
  if (r < 1) throw PreconditionError("stable set construction needs r >= 1");
  if (n == 0 || !g.is_regular() || g.min_degree() == 0) {
    throw PreconditionError("stable set construction needs a regular graph with degree >= 1");
  }
  const double b = beta(r, g.min_degree(), sigma);
  if (b > 0.5) {
    throw PreconditionError("beta = " + std::to_string(b) + " > 1/2: fewer than two parts");
  }
  const auto part_count = static_cast<std::size_t>(std::floor(1.0 / b));
  const auto min_size = static_cast<std::size_t>(std::floor(b * static_cast<double>(n)));

  StableSetReport report;
  report.beta = b;
  report.size_bound = target_size_bound(b, n) + 1.0;

  for (std::size_t attempt = 0; attempt <= kMaxRestarts; ++attempt) {
    PartitionSearch search(g, part_count, min_size, mix_seed(seed, attempt));
    report.initial_cut = search.cut();
    report.moves = 0;
    bool stuck = false;
    while (true) {
      const std::size_t top = search.largest_part();
      const auto candidates = search.deficient(top, r);
      if (candidates.empty()) break;
      bool moved = false;
      for (NodeId u : candidates) {
        if (auto dest = search.improving_destination(u)) {
          search.move(u, *dest);
          ++report.moves;
          moved = true;
          break;
        }
      }
      if (!moved) {
        stuck = true;
        break;
      }
    }
    if (stuck) {
      ++report.restarts;
      continue;
    }
    report.final_cut = search.cut();
    report.partition = search.partition();
    NodeSet top = report.partition.parts[search.largest_part()];
    const ThresholdRule rule = RThreshold{r};
    if (!verify_stable(g, top, rule)) throw InvariantViolation("local search ended on an unstable part");
    const double size = static_cast<double>(top.size());
    if (top.size() < min_size || size > report.size_bound) {
      throw InvariantViolation("stable set size " + std::to_string(top.size()) + " outside [" +
                               std::to_string(min_size) + ", " + std::to_string(report.size_bound) + "]");
    }
    report.set.certificate = internal_degrees(g, top);
    report.set.nodes = std::move(top);
    report.set.kind = SetKind::Stable;
    report.set.rule = rule;
    return report;
  }
  throw InvariantViolation("no legal improving move in " + std::to_string(kMaxRestarts + 1) + " restarts");
}

std::optional<NodeId> find_expandable_node(const Graph& g, const NodeSet& s, std::size_t r) {
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (!s.contains(v) && degree_in(g, v, s) >= r) return v;
  }
  return std::nullopt;
}

StableSetReport build_target_set(const Graph& g, std::size_t r, double sigma, std::uint64_t seed) {
  if (g.num_nodes() == 0 || g.min_degree() < r) {
    throw PreconditionError("target set construction needs min degree >= r");
  }
  StableSetReport report = construct_stable_set(g, r, sigma, seed);
  const ThresholdRule rule = RThreshold{r};
  RunResult result = run(g, Coloring(report.set.nodes), rule, default_max_rounds(g));
  if (result.outcome != Outcome::AllBlue) {
    throw InvariantViolation("stable set of size " + std::to_string(report.set.nodes.size()) +
                             " did not spread to all blue");
  }
  report.set.kind = SetKind::Target;
  report.set.certificate = std::move(result);
  return report;
}

bool verify_stable(const Graph& g, const NodeSet& s, const ThresholdRule& rule) {
  if (s.empty() || s.universe() != g.num_nodes()) return false;
  for (NodeId v : s.members()) {
    if (degree_in(g, v, s) < blue_quota(rule, g.degree(v))) return false;
  }
  return true;
}

bool verify_target(const Graph& g, const NodeSet& t, const ThresholdRule& rule) {
  if (t.universe() != g.num_nodes()) return false;
  return run(g, Coloring(t), rule, default_max_rounds(g)).outcome == Outcome::AllBlue;
}

}  // namespace thresh
