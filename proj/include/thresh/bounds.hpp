#pragma once

#include <cstdint>
#include <optional>

#include "thresh/dynamics.hpp"
#include "thresh/rational.hpp"

namespace thresh {

// Initial-blue-count thresholds for the alpha-threshold model together with
// the logarithm bases of the matching round bounds. Vacuous bounds are
// flagged rather than clamped.
struct AlphaBounds {
  double b_low = 0.0;   // b_0 <= b_low forces all red
  double b_high = 0.0;  // b_0 >= b_high forces all blue
  std::int64_t b_low_floor = 0;
  std::int64_t b_high_ceil = 0;
  double red_base = 0.0;   // rounds to all red are O(log_{red_base} n)
  double blue_base = 0.0;  // rounds to all blue are O(log_{blue_base} n)
  bool red_threshold_meaningful = false;   // 0 <= b_low
  bool blue_threshold_meaningful = false;  // b_high <= n
  bool red_rounds_meaningful = false;      // 1 < red_base < inf
  bool blue_rounds_meaningful = false;     // 1 < blue_base < inf
};

// Regular graphs: b_low = alpha n - sqrt(2/alpha) sigma n,
// b_high = alpha n + sqrt(2/(1-alpha)) sigma n, bases alpha^2/(4 sigma^2) and
// (1-alpha)^2/(4 sigma^2). sigma = 0 gives infinite bases.
AlphaBounds alpha_bounds(std::size_t n, const Rational& alpha, double sigma);

// Irregular generalization with gamma = delta/Delta in (0, 1]; gamma = 1
// reproduces alpha_bounds exactly.
AlphaBounds irregular_alpha_bounds(std::size_t n, const Rational& alpha, double sigma, double gamma);

// factor * log(n) / log(base): a concrete round cap from a base. Zero for an
// infinite base; nullopt when the base is <= 1.
std::optional<double> round_cap(std::size_t n, double base, double factor);

// beta = r / ((1 - sigma) d). Throws PreconditionError for sigma >= 1 or d = 0.
double beta(std::size_t r, std::size_t d, double sigma);

// beta' = r / ((1 - sigma/gamma) delta), gamma = delta/Delta. Throws for
// sigma >= gamma.
double beta_prime(std::size_t r, std::size_t min_degree, std::size_t max_degree, double sigma);

// 2 beta n + 1 / beta.
double target_size_bound(double beta, std::size_t n);

// Every bound that applies to a graph with the given statistics and rule.
struct BoundsReport {
  std::size_t n = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  double sigma = 0.0;
  double gamma = 1.0;
  ThresholdRule rule;
  std::optional<AlphaBounds> alpha;            // alpha rule, regular formulas (only when regular)
  std::optional<AlphaBounds> alpha_irregular;  // alpha rule, general formulas
  std::optional<double> beta;                  // r rule on regular graphs with sigma < 1
  std::optional<double> beta_prime;            // r rule with sigma < gamma
  std::optional<double> target_size_bound;     // from beta' (equals the beta bound when regular)
  bool beta_meaningful = false;                // beta' <= 1/2, so floor(1/beta') >= 2 parts exist
};

BoundsReport bounds_report(std::size_t n, std::size_t min_degree, std::size_t max_degree, double sigma,
                           const ThresholdRule& rule);

}  // namespace thresh
