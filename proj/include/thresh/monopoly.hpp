#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "thresh/dynamics.hpp"
#include "thresh/graph.hpp"

namespace thresh {

// A node partition into floor(1/beta) parts where every part has at least
// floor(beta n) nodes except at most one with floor(beta n) - 1.
struct Partition {
  std::vector<NodeSet> parts;
  std::uint64_t cut_edges = 0;
};

enum class SetKind { Stable, Target };

// A set together with the evidence for its claimed kind: internal degrees of
// the members (stable) or the dynamics run that ends all blue (target).
struct CertifiedSet {
  NodeSet nodes;
  SetKind kind = SetKind::Stable;
  ThresholdRule rule;
  std::variant<std::vector<std::size_t>, RunResult> certificate;
};

struct StableSetReport {
  CertifiedSet set;
  Partition partition;  // final local-search partition; set is its largest part
  double beta = 0.0;
  double size_bound = 0.0;  // 2 beta n + 1/beta + 1
  std::size_t moves = 0;
  std::size_t restarts = 0;
  std::uint64_t initial_cut = 0;
  std::uint64_t final_cut = 0;
};

// Stable set for the r-threshold model on a regular graph via cut-reducing
// local search over size-constrained partitions. Needs sigma < 1 and
// beta = r / ((1 - sigma) d) <= 1/2. The result satisfies
// floor(beta n) <= |S| <= 2 beta n + 1/beta + 1 and is certified stable;
// InvariantViolation otherwise.
StableSetReport construct_stable_set(const Graph& g, std::size_t r, double sigma, std::uint64_t seed = 0);

// Lowest-id node outside s with at least r neighbors in s, if any.
std::optional<NodeId> find_expandable_node(const Graph& g, const NodeSet& s, std::size_t r);

// Target set for the r-threshold model: the stable set above, certified by a
// dynamics run that reaches all blue. Additionally needs min degree >= r.
StableSetReport build_target_set(const Graph& g, std::size_t r, double sigma, std::uint64_t seed = 0);

// Nonempty and every member v has at least blue_quota(rule, d(v)) neighbors
// inside s.
bool verify_stable(const Graph& g, const NodeSet& s, const ThresholdRule& rule);

// Dynamics from blue = t, red elsewhere, ends all blue.
bool verify_target(const Graph& g, const NodeSet& t, const ThresholdRule& rule);

// Round budget used by the verifiers; a limit shows up well before it.
std::size_t default_max_rounds(const Graph& g);

}  // namespace thresh
