#include "thresh/bounds.hpp"

#include <cmath>
#include <limits>

#include "thresh/errors.hpp"

namespace thresh {

namespace {

double log_base(double alpha_part, double gamma, double sigma) {
  if (sigma == 0.0) return std::numeric_limits<double>::infinity();
  return alpha_part * alpha_part * gamma * gamma / (4.0 * sigma * sigma);
}

void check_inputs(const Rational& alpha, double sigma, double gamma) {
  if (!alpha.strictly_between_zero_and_one()) throw PreconditionError("bounds need 0 < alpha < 1");
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw PreconditionError("bounds need sigma >= 0");
  if (!(gamma > 0.0 && gamma <= 1.0)) throw PreconditionError("bounds need 0 < gamma <= 1");
}

}  // namespace

AlphaBounds irregular_alpha_bounds(std::size_t n, const Rational& alpha, double sigma, double gamma) {
  check_inputs(alpha, sigma, gamma);
  const double a = alpha.to_double();
  const double nn = static_cast<double>(n);
  const double g3 = gamma * gamma * gamma;
  const double low_den = a * g3 + (1.0 - a);
  const double high_den = (1.0 - a) * g3 + a;

  AlphaBounds out;
  out.b_low = g3 / low_den * a * nn - std::sqrt(2.0 / a) / low_den * sigma * nn;
  out.b_high = 1.0 / high_den * a * nn + std::sqrt(2.0 / (1.0 - a)) / high_den * sigma * nn;
  out.b_low_floor = static_cast<std::int64_t>(std::floor(out.b_low));
  out.b_high_ceil = static_cast<std::int64_t>(std::ceil(out.b_high));
  out.red_base = log_base(a, gamma, sigma);
  out.blue_base = log_base(1.0 - a, gamma, sigma);
  out.red_threshold_meaningful = out.b_low >= 0.0;
  out.blue_threshold_meaningful = out.b_high <= nn;
  out.red_rounds_meaningful = out.red_base > 1.0 && std::isfinite(out.red_base);
  out.blue_rounds_meaningful = out.blue_base > 1.0 && std::isfinite(out.blue_base);
  return out;
}

AlphaBounds alpha_bounds(std::size_t n, const Rational& alpha, double sigma) {
  return irregular_alpha_bounds(n, alpha, sigma, 1.0);
}

std::optional<double> round_cap(std::size_t n, double base, double factor) {
  if (std::isinf(base)) return 0.0;
  if (!(base > 1.0)) return std::nullopt;
  return factor * std::log(static_cast<double>(n)) / std::log(base);
}

double beta(std::size_t r, std::size_t d, double sigma) {
  if (d == 0) throw PreconditionError("beta needs d >= 1");
  if (!(sigma >= 0.0 && sigma < 1.0)) throw PreconditionError("beta is undefined for sigma >= 1");
  return static_cast<double>(r) / ((1.0 - sigma) * static_cast<double>(d));
}

double beta_prime(std::size_t r, std::size_t min_degree, std::size_t max_degree, double sigma) {
  if (min_degree == 0 || max_degree < min_degree) throw PreconditionError("beta' needs 1 <= delta <= Delta");
  const double gamma = static_cast<double>(min_degree) / static_cast<double>(max_degree);
  if (!(sigma >= 0.0 && sigma < gamma)) throw PreconditionError("beta' is undefined for sigma >= gamma");
  return static_cast<double>(r) / ((1.0 - sigma / gamma) * static_cast<double>(min_degree));
}

double target_size_bound(double beta, std::size_t n) {
  if (!(beta > 0.0)) throw PreconditionError("target size bound needs beta > 0");
  return 2.0 * beta * static_cast<double>(n) + 1.0 / beta;
}

BoundsReport bounds_report(std::size_t n, std::size_t min_degree, std::size_t max_degree, double sigma,
                           const ThresholdRule& rule) {
  validate(rule);
  if (min_degree == 0 || max_degree < min_degree) throw PreconditionError("bounds need 1 <= delta <= Delta");
  BoundsReport report;
  report.n = n;
  report.min_degree = min_degree;
  report.max_degree = max_degree;
  report.sigma = sigma;
  report.gamma = static_cast<double>(min_degree) / static_cast<double>(max_degree);
  report.rule = rule;
  if (const auto* a = std::get_if<AlphaThreshold>(&rule)) {
    if (min_degree == max_degree) report.alpha = alpha_bounds(n, a->alpha, sigma);
    report.alpha_irregular = irregular_alpha_bounds(n, a->alpha, sigma, report.gamma);
    return report;
  }
  const std::size_t r = std::get<RThreshold>(rule).r;
  if (min_degree == max_degree && sigma < 1.0) report.beta = beta(r, min_degree, sigma);
  if (sigma < report.gamma) {
    report.beta_prime = beta_prime(r, min_degree, max_degree, sigma);
    report.target_size_bound = target_size_bound(*report.beta_prime, n);
    report.beta_meaningful = *report.beta_prime <= 0.5;
  }
  return report;
}

}  // namespace thresh
