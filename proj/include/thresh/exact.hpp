#pragma once

#include <cstdint>
#include <string_view>

#include "thresh/dynamics.hpp"
#include "thresh/graph.hpp"

namespace thresh {

enum class SolveMethod { Enumeration, BranchAndBound, ShortcutMs1, ShortcutGirth };

std::string_view to_string(SolveMethod method);

struct ExactResult {
  bool feasible = false;  // false: no set of the requested kind exists
  std::size_t optimum = 0;
  NodeSet witness;
  std::uint64_t nodes_explored = 0;
  SolveMethod method = SolveMethod::Enumeration;
};

struct ExactOptions {
  std::size_t enumeration_cap = 20;  // largest n for plain subset enumeration
  std::size_t search_cap = 64;       // largest n for branch and bound (hard limit 64)
  std::size_t clique_cap = 40;
  bool use_shortcuts = true;  // r = 1 and r = 2 closed forms for stable sets
};

// Minimum stable set. r = 1 gives 2 whenever there is an edge, r = 2 gives
// the girth; otherwise subsets are enumerated by size then lexicographically
// (n <= enumeration_cap) or searched by branch and bound (n <= search_cap).
// Throws PreconditionError when the instance exceeds the caps.
ExactResult min_stable_set(const Graph& g, const ThresholdRule& rule, const ExactOptions& options = {});

// The two general-purpose routes, exposed for cross-checking.
ExactResult min_stable_set_enumeration(const Graph& g, const ThresholdRule& rule, std::size_t cap = 20);
ExactResult min_stable_set_branch_and_bound(const Graph& g, const ThresholdRule& rule, std::size_t cap = 64);

// Minimum target set by enumeration by size then lexicographically.
ExactResult min_target_set(const Graph& g, const ThresholdRule& rule, const ExactOptions& options = {});

// Maximum clique by branch and bound with a greedy coloring bound.
ExactResult max_clique(const Graph& g, const ExactOptions& options = {});

}  // namespace thresh
