#include "thresh/reductions.hpp"

#include "thresh/errors.hpp"

namespace thresh {

std::string NodeRole::label() const {
  switch (kind) {
    case Kind::Copy: return "v" + std::to_string(original) + "^" + std::to_string(copy);
    case Kind::Hub: return "w" + std::to_string(copy);
    case Kind::Original: return "v" + std::to_string(original);
    case Kind::CliqueBooster: return "u";
    case Kind::Padding: return "pad";
  }
  return "?";
}

GadgetOutput alpha_stable_gadget(const Graph& g, const Rational& alpha) {
  if (!alpha.strictly_between_zero_and_one()) throw PreconditionError("gadget needs 0 < alpha < 1");
  const std::size_t n = g.num_nodes();
  if (n == 0) throw PreconditionError("gadget needs a nonempty graph");
  auto copy_id = [n](int copy, NodeId i) { return static_cast<NodeId>((copy - 1) * n + i); };
  auto hub_id = [n](int copy) { return static_cast<NodeId>(4 * n + copy - 1); };

  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(copy_id(1, u), copy_id(1, v));
    edges.emplace_back(copy_id(4, u), copy_id(4, v));
  }
  for (int copy = 1; copy <= 4; ++copy) {
    for (NodeId i = 0; i < n; ++i) edges.emplace_back(copy_id(copy, i), hub_id(copy));
  }
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!g.has_edge(i, j)) {
        edges.emplace_back(copy_id(1, i), copy_id(2, j));
        edges.emplace_back(copy_id(3, i), copy_id(4, j));
      } else {
        edges.emplace_back(copy_id(2, i), copy_id(3, j));
      }
    }
  }

  GadgetOutput out;
  out.gprime = Graph(4 * n + 4, edges);
  out.alpha = alpha;
  out.n = n;
  out.n_prime = 4 * n + 4;
  out.node_map.resize(out.n_prime);
  for (int copy = 1; copy <= 4; ++copy) {
    for (NodeId i = 0; i < n; ++i) out.node_map[copy_id(copy, i)] = {NodeRole::Kind::Copy, copy, i};
    out.node_map[hub_id(copy)] = {NodeRole::Kind::Hub, copy, 0};
  }
  if (out.gprime.min_degree() != n || out.gprime.max_degree() != n) {
    throw InvariantViolation("alpha-stable gadget is not " + std::to_string(n) + "-regular");
  }
  return out;
}

GadgetOutput clique_to_alpha_clique(const Graph& g, std::size_t k, const Rational& alpha) {
  if (!alpha.strictly_between_zero_and_one()) throw PreconditionError("clique shift needs 0 < alpha < 1");
  const std::size_t n = g.num_nodes();
  if (k < 1 || k > n) throw PreconditionError("clique shift needs 1 <= k <= n");
  const std::int64_t p = alpha.num();
  const std::int64_t q = alpha.den();
  const auto kk = static_cast<std::int64_t>(k);
  const auto nn = static_cast<std::int64_t>(n);

  GadgetOutput out;
  out.alpha = alpha;
  out.k = k;
  out.n = n;
  std::vector<Edge> edges = g.edges();
  out.node_map.reserve(n);
  for (NodeId i = 0; i < n; ++i) out.node_map.push_back({NodeRole::Kind::Original, 0, i});

  if (kk * q >= p * nn) {
    // k/alpha - n = (kq - pn) / p
    const std::int64_t excess = kk * q - p * nn;
    const std::int64_t pad = excess / p;
    out.integral = excess % p == 0;
    out.n_prime = n + static_cast<std::size_t>(pad);
    out.node_map.resize(out.n_prime, {NodeRole::Kind::Padding, 0, 0});
  } else {
    // (alpha n - k) / (1 - alpha) = (pn - kq) / (q - p)
    const std::int64_t need = p * nn - kk * q;
    const std::int64_t extra = (need + (q - p) - 1) / (q - p);
    out.integral = need % (q - p) == 0;
    out.n_prime = n + static_cast<std::size_t>(extra);
    for (auto u = static_cast<NodeId>(n); u < out.n_prime; ++u) {
      for (NodeId v = 0; v < u; ++v) edges.emplace_back(v, u);
    }
    out.node_map.resize(out.n_prime, {NodeRole::Kind::CliqueBooster, 0, 0});
  }
  out.gprime = Graph(out.n_prime, edges);
  return out;
}

bool reaches_alpha_fraction(std::size_t clique_size, const Rational& alpha, std::size_t n_prime) {
  return static_cast<std::int64_t>(clique_size) * alpha.den() >= alpha.num() * static_cast<std::int64_t>(n_prime);
}

}  // namespace thresh
