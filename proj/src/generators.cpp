#include "thresh/generators.hpp"

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "thresh/errors.hpp"
#include "thresh/rng.hpp"

namespace thresh {

namespace {

constexpr std::size_t kMaxExactRejectionDegree = 5;

std::uint64_t edge_key(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

std::vector<NodeId> make_points(std::size_t n, std::size_t d) {
  std::vector<NodeId> points;
  points.reserve(n * d);
  for (NodeId v = 0; v < n; ++v) points.insert(points.end(), d, v);
  return points;
}

// One uniform pairing; nullopt if it has a loop or a repeated pair.
std::optional<std::vector<Edge>> try_pairing(std::size_t n, std::size_t d, Rng& rng) {
  auto points = make_points(n, d);
  rng.shuffle(points);
  std::vector<Edge> edges;
  edges.reserve(points.size() / 2);
  std::unordered_set<std::uint64_t> seen;
  for (std::size_t i = 0; i < points.size(); i += 2) {
    const NodeId u = points[i];
    const NodeId v = points[i + 1];
    if (u == v || !seen.insert(edge_key(u, v)).second) return std::nullopt;
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return edges;
}

// Sequential pairing that never creates loops or multi-edges. nullopt when
// the remaining points admit no legal pair.
std::optional<std::vector<Edge>> try_sequential(std::size_t n, std::size_t d, Rng& rng) {
  auto points = make_points(n, d);
  std::vector<Edge> edges;
  edges.reserve(points.size() / 2);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(points.size());
  std::size_t failures = 0;
  while (!points.empty()) {
    const std::size_t i = rng.below(points.size());
    std::size_t j = rng.below(points.size() - 1);
    if (j >= i) ++j;
    const NodeId u = points[i];
    const NodeId v = points[j];
    if (u != v && !seen.contains(edge_key(u, v))) {
      seen.insert(edge_key(u, v));
      edges.emplace_back(std::min(u, v), std::max(u, v));
      for (std::size_t idx : {std::max(i, j), std::min(i, j)}) {
        points[idx] = points.back();
        points.pop_back();
      }
      failures = 0;
      continue;
    }
    if (++failures < 4 * points.size() + 64) continue;
    // Many misses in a row: check whether any legal pair is left at all.
    std::vector<NodeId> open(points.begin(), points.end());
    std::sort(open.begin(), open.end());
    open.erase(std::unique(open.begin(), open.end()), open.end());
    bool any = false;
    for (std::size_t a = 0; a < open.size() && !any; ++a) {
      for (std::size_t b = a + 1; b < open.size() && !any; ++b) {
        any = !seen.contains(edge_key(open[a], open[b]));
      }
    }
    if (!any) return std::nullopt;
    failures = 0;
  }
  return edges;
}

}  // namespace

GraphKind parse_graph_kind(std::string_view name) {
  if (name == "erdos_renyi" || name == "erdos-renyi" || name == "gnp") return GraphKind::ErdosRenyi;
  if (name == "random_regular" || name == "random-regular" || name == "gnd") return GraphKind::RandomRegular;
  if (name == "complete") return GraphKind::Complete;
  if (name == "cycle") return GraphKind::Cycle;
  if (name == "path") return GraphKind::Path;
  if (name == "star") return GraphKind::Star;
  if (name == "petersen") return GraphKind::Petersen;
  if (name == "empty") return GraphKind::Empty;
  throw PreconditionError("unknown graph kind '" + std::string(name) + "'");
}

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::ErdosRenyi: return "erdos_renyi";
    case GraphKind::RandomRegular: return "random_regular";
    case GraphKind::Complete: return "complete";
    case GraphKind::Cycle: return "cycle";
    case GraphKind::Path: return "path";
    case GraphKind::Star: return "star";
    case GraphKind::Petersen: return "petersen";
    case GraphKind::Empty: return "empty";
  }
  return "?";
}

Graph generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GraphKind::ErdosRenyi: return gen_erdos_renyi(spec.n, spec.p, spec.seed);
    case GraphKind::RandomRegular: return gen_random_regular(spec.n, spec.d, spec.seed);
    default: return gen_named(spec.kind, spec.n);
  }
}

Graph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (!(p > 0.0 && p < 1.0)) throw PreconditionError("erdos_renyi needs 0 < p < 1");
  if (n < 1) throw PreconditionError("erdos_renyi needs n >= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (rng.uniform() < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph gen_random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (d == 0 || d >= n) throw PreconditionError("random_regular needs 0 < d < n");
  if ((n * d) % 2 != 0) throw PreconditionError("random_regular needs n*d even");
  Rng rng(seed);
  const std::size_t budget = 10 * d * n;
  // Dense small cases (K_6 as a 5-regular graph, say) almost never come out
  // simple from a uniform pairing; those fall through to sequential pairing.
  const std::size_t exact_attempts = d <= kMaxExactRejectionDegree ? std::min<std::size_t>(budget / 2, 1000) : 0;
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    auto edges = attempt < exact_attempts ? try_pairing(n, d, rng) : try_sequential(n, d, rng);
    if (edges) {
      std::sort(edges->begin(), edges->end());
      return Graph(n, *edges);
    }
  }
  throw InvariantViolation("random_regular: no simple pairing after " + std::to_string(budget) +
                           " attempts");
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, static_cast<NodeId>(n - 1));
  return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
  if (n < 1) throw PreconditionError("path needs n >= 1");
  std::vector<Edge> edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph star_graph(std::size_t n) {
  if (n < 2) throw PreconditionError("star needs n >= 2");
  std::vector<Edge> edges;
  for (NodeId i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph(n, edges);
}

// Outer 5-cycle 0..4, spokes i--i+5, inner pentagram 5..9.
Graph petersen_graph() {
  std::vector<Edge> edges;
  for (NodeId i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
  }
  return Graph(10, edges);
}

Graph gen_named(GraphKind kind, std::size_t n) {
  switch (kind) {
    case GraphKind::Complete:
      if (n < 1) throw PreconditionError("complete needs n >= 1");
      return complete_graph(n);
    case GraphKind::Cycle: return cycle_graph(n);
    case GraphKind::Path: return path_graph(n);
    case GraphKind::Star: return star_graph(n);
    case GraphKind::Petersen: return petersen_graph();
    case GraphKind::Empty:
      if (n < 1) throw PreconditionError("empty needs n >= 1");
      return Graph(n, {});
    default: throw PreconditionError("graph kind needs a seed; use generate()");
  }
}

}  // namespace thresh
