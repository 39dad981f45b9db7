#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "thresh/graph.hpp"

namespace thresh {

enum class GraphKind { ErdosRenyi, RandomRegular, Complete, Cycle, Path, Star, Petersen, Empty };

GraphKind parse_graph_kind(std::string_view name);
std::string_view to_string(GraphKind kind);

struct GeneratorSpec {
  GraphKind kind = GraphKind::Complete;
  std::size_t n = 1;
  std::size_t d = 0;  // RandomRegular
  double p = 0.5;     // ErdosRenyi
  std::uint64_t seed = 0;
};

Graph generate(const GeneratorSpec& spec);

// G(n, p): every pair independently with probability p, 0 < p < 1.
Graph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed);

// Simple d-regular graph on n nodes (n*d even, 0 < d < n).
//
// Small degrees use the pairing model with whole-graph rejection, which is
// exactly uniform (for up to 1000 attempts, at most half the budget). From degree 6 on a simple pairing is too rare for that
// (probability about exp(-(d^2-1)/4)), so points are paired sequentially,
// only ever joining two distinct non-adjacent nodes, restarting when stuck
// (Steger-Wormald). Throws InvariantViolation if the attempt budget runs out.
Graph gen_random_regular(std::size_t n, std::size_t d, std::uint64_t seed);

// Deterministic families. For Petersen n is ignored (always 10 nodes).
Graph gen_named(GraphKind kind, std::size_t n);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t n);
Graph petersen_graph();

}  // namespace thresh
