#include "thresh/dynamics.hpp"

#include <numeric>

#include "thresh/errors.hpp"
#include "thresh/rng.hpp"

namespace thresh {

void validate(const ThresholdRule& rule) {
  if (const auto* r = std::get_if<RThreshold>(&rule)) {
    if (r->r < 1) throw PreconditionError("r-threshold needs r >= 1");
  } else if (!std::get<AlphaThreshold>(rule).alpha.strictly_between_zero_and_one()) {
    throw PreconditionError("alpha-threshold needs 0 < alpha < 1");
  }
}

ThresholdRule parse_rule(std::string_view text) {
  ThresholdRule rule;
  if (text.starts_with("r=")) {
    const Rational r = Rational::parse(text.substr(2));
    if (r.den() != 1 || r.num() < 1) throw PreconditionError("r must be a positive integer");
    rule = RThreshold{static_cast<std::size_t>(r.num())};
  } else if (text.starts_with("alpha=")) {
    rule = AlphaThreshold{Rational::parse(text.substr(6))};
  } else {
    throw PreconditionError("rule must look like r=3 or alpha=1/2, got '" + std::string(text) + "'");
  }
  validate(rule);
  return rule;
}

std::string to_string(const ThresholdRule& rule) {
  if (const auto* r = std::get_if<RThreshold>(&rule)) return "r=" + std::to_string(r->r);
  return "alpha=" + std::get<AlphaThreshold>(rule).alpha.str();
}

std::size_t blue_quota(const ThresholdRule& rule, std::size_t degree) {
  if (const auto* r = std::get_if<RThreshold>(&rule)) return r->r;
  return static_cast<std::size_t>(std::get<AlphaThreshold>(rule).alpha.ceil_times(static_cast<std::int64_t>(degree)));
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::AllBlue: return "all_blue";
    case Outcome::AllRed: return "all_red";
    case Outcome::MixedFixed: return "mixed_fixed";
    case Outcome::TwoCycle: return "two_cycle";
  }
  return "?";
}

Coloring step(const Graph& g, const Coloring& c, const ThresholdRule& rule) {
  const std::size_t n = g.num_nodes();
  if (c.num_nodes() != n) throw PreconditionError("coloring size does not match graph");
  const bool alpha_rule = std::holds_alternative<AlphaThreshold>(rule);
  if (alpha_rule && n > 0 && g.min_degree() == 0) {
    throw PreconditionError("alpha-threshold is undefined on isolated nodes");
  }
  NodeSet next(n);
  for (NodeId v = 0; v < n; ++v) {
    const std::size_t quota = blue_quota(rule, g.degree(v));
    if (degree_in(g, v, c.blue()) >= quota) next.insert(v);
  }
  return Coloring(std::move(next));
}

RunResult run(const Graph& g, const Coloring& initial, const ThresholdRule& rule, std::size_t max_rounds,
              const RoundObserver& observer) {
  validate(rule);
  RunResult result;
  Coloring before;  // state of round t-1 (valid once t >= 1)
  Coloring current = initial;
  if (observer) observer(0, current);
  result.b_trace.push_back(current.blue_count());
  for (std::size_t t = 0; t < max_rounds; ++t) {
    Coloring next = step(g, current, rule);
    if (observer) observer(t + 1, next);
    if (next == current) {
      result.rounds_to_limit = t;
      result.period = 1;
      const std::size_t b = current.blue_count();
      result.outcome = b == g.num_nodes() ? Outcome::AllBlue : b == 0 ? Outcome::AllRed : Outcome::MixedFixed;
      result.limit_states = {std::move(current)};
      return result;
    }
    if (t >= 1 && next == before) {
      result.rounds_to_limit = t - 1;
      result.period = 2;
      result.outcome = Outcome::TwoCycle;
      result.limit_states = {std::move(before), std::move(current)};
      return result;
    }
    result.b_trace.push_back(next.blue_count());
    before = std::move(current);
    current = std::move(next);
  }
  throw ConvergenceError("no period <= 2 limit within " + std::to_string(max_rounds) + " rounds");
}

Coloring ball_coloring(const Graph& g, NodeId v, std::size_t ell) { return Coloring(bfs_ball(g, v, ell)); }

Coloring random_coloring(std::size_t n, std::size_t b0, std::uint64_t seed) {
  if (b0 > n) throw PreconditionError("cannot color more than n nodes blue");
  Rng rng(seed);
  std::vector<NodeId> ids(n);
  std::iota(ids.begin(), ids.end(), NodeId{0});
  // Partial Fisher-Yates: the first b0 slots become a uniform b0-subset.
  for (std::size_t i = 0; i < b0; ++i) std::swap(ids[i], ids[i + rng.below(n - i)]);
  return Coloring(NodeSet(n, std::span<const NodeId>(ids.data(), b0)));
}

}  // namespace thresh
