#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "thresh/errors.hpp"
#include "thresh/graph.hpp"
#include "thresh/rational.hpp"

namespace thresh {

// Blue next round iff at least r neighbors are blue.
struct RThreshold {
  std::size_t r = 1;
};

// Blue next round iff at least an alpha fraction of the neighbors are blue
// (ties go blue). Compared as blue * den >= num * degree.
struct AlphaThreshold {
  Rational alpha;
};

using ThresholdRule = std::variant<RThreshold, AlphaThreshold>;

// Throws PreconditionError unless r >= 1 or 0 < alpha < 1.
void validate(const ThresholdRule& rule);

// "r=3" or "alpha=1/2".
ThresholdRule parse_rule(std::string_view text);
std::string to_string(const ThresholdRule& rule);

// Smallest number of blue neighbors that makes a node of degree `degree` blue.
std::size_t blue_quota(const ThresholdRule& rule, std::size_t degree);

// One round's coloring: the blue set, red is the complement.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(NodeSet blue) : blue_(std::move(blue)) {}

  static Coloring all_red(std::size_t n) { return Coloring(NodeSet(n)); }
  static Coloring all_blue(std::size_t n) { return Coloring(NodeSet::full(n)); }

  const NodeSet& blue() const { return blue_; }
  std::size_t num_nodes() const { return blue_.universe(); }
  std::size_t blue_count() const { return blue_.size(); }
  std::size_t red_count() const { return blue_.universe() - blue_.size(); }
  bool is_blue(NodeId v) const { return blue_.contains(v); }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  NodeSet blue_;
};

enum class Outcome { AllBlue, AllRed, MixedFixed, TwoCycle };

std::string_view to_string(Outcome outcome);

struct RunResult {
  std::size_t rounds_to_limit = 0;  // first round whose state lies on the limit cycle
  std::size_t period = 1;
  std::vector<Coloring> limit_states;  // one state, or the two alternating states
  Outcome outcome = Outcome::AllRed;
  std::vector<std::size_t> b_trace;  // b_0, b_1, ... up to the last distinct state
};

// Called with (t, coloring of round t) for every round the run computes,
// starting at t = 0.
using RoundObserver = std::function<void(std::size_t, const Coloring&)>;

// Thrown by run() when no period-1 or period-2 limit shows up in time.
class ConvergenceError : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

// Synchronous update of every node against `c`.
Coloring step(const Graph& g, const Coloring& c, const ThresholdRule& rule);

RunResult run(const Graph& g, const Coloring& initial, const ThresholdRule& rule, std::size_t max_rounds,
              const RoundObserver& observer = {});

// Blue = BFS ball of radius ell around v, all else red.
Coloring ball_coloring(const Graph& g, NodeId v, std::size_t ell);

// Uniformly random blue set of exactly b0 nodes.
Coloring random_coloring(std::size_t n, std::size_t b0, std::uint64_t seed);

}  // namespace thresh
