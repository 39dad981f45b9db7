#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "thresh/bounds.hpp"
#include "thresh/dynamics.hpp"
#include "thresh/generators.hpp"

namespace thresh {

inline constexpr const char* kVersion = "1.0.0";

// Runs fn(i) for i in [0, count) on up to `threads` workers (0 = hardware
// concurrency). Callers write results into slot i, so output order never
// depends on scheduling.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& fn);

// ---- threshold sweep -------------------------------------------------------

struct SweepConfig {
  std::size_t n = 2000;
  std::size_t d = 64;
  Rational alpha{1, 2};
  std::size_t trials = 20;
  std::size_t points = 11;  // evenly spaced b0 values in [0, n], plus the two bound values
  std::uint64_t master_seed = 1;
  std::size_t threads = 0;
};

struct SweepRow {
  std::size_t b0 = 0;
  std::size_t trials = 0;
  double frac_all_blue = 0.0;
  double frac_all_red = 0.0;
  double mean_rounds = 0.0;
  std::size_t max_rounds = 0;
};

struct SweepResult {
  SweepConfig config;
  double sigma = 0.0;
  AlphaBounds bounds;
  std::vector<SweepRow> rows;  // ascending b0
};

SweepResult threshold_sweep(const SweepConfig& cfg);

// ---- round scaling ---------------------------------------------------------

struct ScalingConfig {
  std::vector<std::size_t> ns{500, 1000, 2000, 4000};
  std::size_t d = 64;
  Rational alpha{1, 2};
  // Initial blue fraction of n; 0 means "use ceil(b_high) of each graph".
  double blue_fraction = 0.0;
  std::size_t trials = 10;
  std::uint64_t master_seed = 1;
  std::size_t threads = 0;
};

struct ScalingRow {
  std::size_t n = 0;
  std::size_t d = 0;
  double sigma = 0.0;
  std::size_t b0 = 0;
  std::size_t trials = 0;
  double frac_consensus = 0.0;  // all_blue or all_red
  double mean_rounds = 0.0;
  std::size_t max_rounds = 0;
  double c_fit = 0.0;  // max_rounds / ln n
};

struct ScalingResult {
  ScalingConfig config;
  std::vector<ScalingRow> rows;
  double c_max = 0.0;
};

ScalingResult round_scaling(const ScalingConfig& cfg);

// ---- expander mixing check -------------------------------------------------

struct MixingConfig {
  std::size_t n = 500;
  std::vector<std::size_t> ds{8, 16, 32};
  std::size_t graphs = 10;  // cycled through ds
  std::size_t pairs = 1000;  // total, spread evenly over the graphs
  double tolerance = 1e-9;
  std::uint64_t master_seed = 1;
  std::size_t threads = 0;
};

struct MixingRow {
  std::size_t graph = 0;
  std::size_t n = 0;
  std::size_t d = 0;
  double sigma = 0.0;
  std::size_t pairs = 0;
  std::size_t violations = 0;
  double worst_ratio = 0.0;  // max |e(A,B) - |A||B|d/n| / bound over nonzero bounds
};

struct MixingResult {
  MixingConfig config;
  std::vector<MixingRow> rows;
  std::size_t total_pairs = 0;
  std::size_t total_violations = 0;
};

// Deviation |e(A,B) - |A||B|d/n| and the mixing-lemma bound for one pair.
struct MixingTerms {
  double deviation = 0.0;
  double bound = 0.0;
};
MixingTerms mixing_terms(const Graph& g, double sigma, const NodeSet& a, const NodeSet& b);

MixingResult mixing_check(const MixingConfig& cfg);

// ---- tightness ball --------------------------------------------------------

struct TightnessConfig {
  std::size_t n = 10000;
  std::size_t d = 100;
  Rational alpha{1, 2};
  std::optional<std::size_t> ell;  // default floor(log_d(n) / 2)
  NodeId center = 0;
  std::uint64_t master_seed = 1;
};

struct TightnessResult {
  TightnessConfig config;
  std::size_t ell = 0;
  std::size_t b0 = 0;
  double ball_cap = 0.0;  // d^(ell+1)
  Outcome outcome = Outcome::AllRed;
  std::size_t rounds = 0;  // rounds_to_limit
  // Last round t such that the center is blue in every round 0..t; nullopt
  // if never blue.
  std::optional<std::size_t> center_blue_through;
  std::vector<std::size_t> b_trace;
  bool all_red = false;
  bool rounds_at_least_ell = false;
  bool center_blue_until_ell_minus_1 = false;
  bool ball_within_cap = false;
  bool passed() const { return all_red && rounds_at_least_ell && center_blue_until_ell_minus_1 && ball_within_cap; }
};

TightnessResult tightness_ball(const TightnessConfig& cfg);

// ---- target bound audit ----------------------------------------------------

struct AuditConfig {
  GeneratorSpec graph{GraphKind::RandomRegular, 200, 16, 0.5, 0};
  std::size_t r = 2;
  std::size_t trials = 20;  // random graphs get seed mix(master, i); fixed graphs vary the search seed
  std::uint64_t master_seed = 1;
  std::size_t threads = 0;
};

struct AuditRow {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t d = 0;
  double sigma = 0.0;
  double beta = 0.0;
  std::size_t floor_beta_n = 0;
  double bound = 0.0;  // 2 beta n + 1/beta + 1
  std::size_t stable_size = 0;
  bool stable_certified = false;
  std::size_t target_size = 0;
  bool target_certified = false;
  std::size_t moves = 0;
  std::string error;  // nonempty if the construction threw
  bool ok() const {
    return error.empty() && stable_certified && target_certified && stable_size >= floor_beta_n &&
           static_cast<double>(stable_size) <= bound && static_cast<double>(target_size) <= bound;
  }
};

struct AuditResult {
  AuditConfig config;
  std::vector<AuditRow> rows;
  std::size_t passed = 0;
};

AuditResult target_bound_audit(const AuditConfig& cfg);

// CSV writers. Every file starts with a '#' comment block echoing the
// configuration and the artifact version.
void write_csv(std::ostream& out, const SweepResult& result);
void write_csv(std::ostream& out, const ScalingResult& result);
void write_csv(std::ostream& out, const MixingResult& result);
void write_csv(std::ostream& out, const TightnessResult& result);
void write_csv(std::ostream& out, const AuditResult& result);

}  // namespace thresh
