#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thresh/graph.hpp"
#include "thresh/rational.hpp"

namespace thresh {

// What a node of a gadget graph stands for.
struct NodeRole {
  enum class Kind { Copy, Hub, Original, CliqueBooster, Padding };
  Kind kind = Kind::Original;
  int copy = 0;           // Copy and Hub: 1..4
  NodeId original = 0;    // Copy and Original: id in the input graph
  std::string label() const;
};

struct GadgetOutput {
  Graph gprime;
  std::vector<NodeRole> node_map;  // indexed by node of gprime
  Rational alpha;
  std::size_t k = 0;        // clique_to_alpha_clique only
  std::size_t n = 0;        // nodes of the input graph
  std::size_t n_prime = 0;  // nodes of gprime
  bool integral = true;     // padding / booster count needed no rounding
};

// Four copies V1..V4 of the node set plus hubs w1..w4 (ids: V_j holds
// (j-1)n .. jn-1, hubs are 4n .. 4n+3). V1 and V4 carry the edges of g,
// V2 and V3 none; w_j joins all of V_j; V1-V2 and V3-V4 carry the
// complement of g between different indices, V2-V3 carries g itself.
// The result is n-regular, and g has a clique of size >= alpha n exactly
// when the smallest alpha-stable set of the gadget has ceil(alpha n) + 1 nodes.
// Throws InvariantViolation if the regularity check fails.
GadgetOutput alpha_stable_gadget(const Graph& g, const Rational& alpha);

// Turns "clique of size >= k in g" into "clique of size >= alpha n' in g'".
// k >= alpha n: pad with floor(k/alpha - n) isolated nodes.
// k < alpha n: add ceil((alpha n - k)/(1 - alpha)) nodes adjacent to
// everything.
GadgetOutput clique_to_alpha_clique(const Graph& g, std::size_t k, const Rational& alpha);

// clique_size >= alpha * n_prime, exactly.
bool reaches_alpha_fraction(std::size_t clique_size, const Rational& alpha, std::size_t n_prime);

}  // namespace thresh
