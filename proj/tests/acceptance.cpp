// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "thresh/bounds.hpp"
#include "thresh/dynamics.hpp"
#include "thresh/exact.hpp"
#include "thresh/experiments.hpp"
#include "thresh/generators.hpp"
#include "thresh/monopoly.hpp"
#include "thresh/reductions.hpp"
#include "thresh/rng.hpp"
#include "thresh/spectral.hpp"

using namespace thresh;

namespace {

constexpr std::uint64_t kMaster = 20261019;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Graph from_pairs(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
  std::vector<Edge> edges(pairs.begin(), pairs.end());
  return Graph(n, edges);
}

// Shared by criteria 1 and 2.
struct AlphaSetup {
  Graph g;
  double sigma = 0.0;
  AlphaBounds bounds;
};

const AlphaSetup& alpha_setup() {
  static const AlphaSetup setup = [] {
    AlphaSetup s{gen_random_regular(2000, 64, mix_seed(kMaster, 1)), 0.0, {}};
    s.sigma = sigma(s.g);
    s.bounds = alpha_bounds(2000, Rational(1, 2), s.sigma);
    return s;
  }();
  return setup;
}

Verdict alpha_side(bool blue) {
  const AlphaSetup& s = alpha_setup();
  const std::size_t n = s.g.num_nodes();
  const double base = blue ? s.bounds.blue_base : s.bounds.red_base;
  const auto cap = round_cap(n, base, 4.0);
  const std::size_t b0 = blue ? static_cast<std::size_t>(std::clamp<std::int64_t>(s.bounds.b_high_ceil, 0, n))
                              : static_cast<std::size_t>(std::clamp<std::int64_t>(s.bounds.b_low_floor, 0, n));
  const Outcome want = blue ? Outcome::AllBlue : Outcome::AllRed;
  std::size_t hits = 0;
  std::size_t worst = 0;
  for (std::size_t t = 0; t < 20; ++t) {
    const Coloring init = random_coloring(n, b0, mix_seed(kMaster, (blue ? 100 : 200) + t));
    const RunResult res = run(s.g, init, AlphaThreshold{Rational(1, 2)}, default_max_rounds(s.g));
    worst = std::max(worst, res.rounds_to_limit);
    if (res.outcome == want && cap && static_cast<double>(res.rounds_to_limit) <= *cap) ++hits;
  }
  return {hits == 20, fmt("%zu/20 %s, max rounds %zu, cap %s (sigma=%.4f, b0=%zu, base=%.4f)", hits,
                          blue ? "all_blue" : "all_red", worst, cap ? fmt("%.1f", *cap).c_str() : "undefined",
                          s.sigma, b0, base)};
}

Verdict mixing() {
  const MixingResult res = mixing_check(MixingConfig{500, {8, 16, 32}, 10, 1000, 1e-9, kMaster, 0});
  double worst = 0.0;
  for (const auto& row : res.rows) worst = std::max(worst, row.worst_ratio);
  return {res.total_violations == 0 && res.total_pairs == 1000,
          fmt("%zu pairs on %zu graphs, %zu violations, worst deviation/bound %.4f", res.total_pairs,
              res.rows.size(), res.total_violations, worst)};
}

Verdict friedman() {
  std::size_t ok = 0;
  std::size_t total = 0;
  std::string per_d;
  for (std::size_t d : {4U, 9U, 16U, 25U}) {
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const double s = sigma(gen_random_regular(1000, d, mix_seed(kMaster + d, seed)));
      worst = std::max(worst, s);
      ok += s <= 2.0 / std::sqrt(static_cast<double>(d)) + 0.15 ? 1 : 0;
      ++total;
    }
    per_d += fmt(" d=%zu max %.3f;", d, worst);
  }
  return {ok * 100 >= total * 95, fmt("%zu/%zu within 2/sqrt(d)+0.15;%s", ok, total, per_d.c_str())};
}

Verdict stable_target() {
  AuditConfig cfg;
  cfg.graph = GeneratorSpec{GraphKind::RandomRegular, 200, 16, 0.5, 0};
  cfg.r = 2;
  cfg.trials = 20;
  cfg.master_seed = kMaster;
  const AuditResult res = target_bound_audit(cfg);
  double worst = 0.0;
  for (const auto& row : res.rows) worst = std::max(worst, static_cast<double>(row.target_size) / row.bound);
  return {res.passed == 20, fmt("%zu/20 certified within bounds, max target/bound %.3f", res.passed, worst)};
}

// Canonical adjacency code over all relabelings (n <= 7).
std::uint32_t canonical(const oracle::AdjMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = ~0U;
  do {
    std::uint32_t code = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) code = (code << 1) | (a[perm[i]][perm[j]] ? 1U : 0U);
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool connected(const Graph& g) { return bfs_ball(g, 0, g.num_nodes()).size() == g.num_nodes(); }

Verdict shortcuts() {
  std::mt19937_64 rng(mix_seed(kMaster, 6));
  std::vector<std::pair<std::size_t, std::uint32_t>> seen;
  std::size_t agree = 0;
  std::size_t sampled = 0;
  ExactOptions plain;
  plain.use_shortcuts = false;
  while (sampled < 300) {
    const std::size_t n = 2 + rng() % 6;
    const double p = 0.2 + 0.6 * std::uniform_real_distribution<double>(0, 1)(rng);
    const auto pairs = oracle::random_edges(n, p, rng);
    const Graph g = from_pairs(n, pairs);
    if (!connected(g)) continue;
    const auto key = std::make_pair(n, canonical(oracle::matrix(n, pairs)));
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    ++sampled;
    const ExactResult s2 = min_stable_set(g, RThreshold{2});
    const ExactResult e2 = min_stable_set(g, RThreshold{2}, plain);
    const ExactResult s1 = min_stable_set(g, RThreshold{1});
    const ExactResult e1 = min_stable_set(g, RThreshold{1}, plain);
    const auto gi = girth(g);
    bool ok = s2.feasible == gi.has_value() && e2.feasible == gi.has_value();
    if (ok && gi) ok = s2.optimum == *gi && e2.optimum == *gi;
    ok = ok && s1.feasible && e1.feasible && s1.optimum == 2 && e1.optimum == 2;
    agree += ok ? 1 : 0;
  }
  return {agree == 300, fmt("%zu/300 non-isomorphic connected graphs agree", agree)};
}

Verdict gadget_equivalence() {
  std::mt19937_64 rng(mix_seed(kMaster, 7));
  const std::vector<Rational> alphas{Rational(1, 3), Rational(1, 2), Rational(2, 3)};
  std::size_t ok = 0;
  std::size_t yes = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const double p = std::uniform_real_distribution<double>(0.2, 1.0)(rng);
    const auto pairs = oracle::random_edges(n, p, rng);
    const Graph g = from_pairs(n, pairs);
    const std::size_t clique = max_clique(g).optimum;
    bool all = true;
    for (const Rational& alpha : alphas) {
      const GadgetOutput out = alpha_stable_gadget(g, alpha);
      const bool shape = out.gprime.num_nodes() == 4 * n + 4 && out.gprime.is_regular() && out.gprime.max_degree() == n;
      const ExactResult ms = min_stable_set(out.gprime, AlphaThreshold{alpha});
      const bool has = static_cast<std::int64_t>(clique) * alpha.den() >= alpha.num() * static_cast<std::int64_t>(n);
      const auto target = static_cast<std::size_t>(alpha.ceil_times(static_cast<std::int64_t>(n))) + 1;
      yes += has ? 1 : 0;
      all = all && shape && ms.feasible && (has == (ms.optimum == target));
    }
    ok += all ? 1 : 0;
  }
  return {ok == 200, fmt("%zu/200 graphs agree for all three alphas (%zu yes-instances of 600)", ok, yes)};
}

Verdict clique_shift() {
  std::mt19937_64 rng(mix_seed(kMaster, 8));
  const std::vector<Rational> alphas{Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(3, 4)};
  std::size_t ok = 0;
  std::size_t kept = 0;
  std::size_t tried = 0;
  while (kept < 200) {
    ++tried;
    const std::size_t n = 1 + rng() % 8;
    const auto pairs = oracle::random_edges(n, std::uniform_real_distribution<double>(0.2, 0.9)(rng), rng);
    const Graph g = from_pairs(n, pairs);
    const std::size_t k = 1 + rng() % n;
    const Rational alpha = alphas[rng() % alphas.size()];
    const GadgetOutput out = clique_to_alpha_clique(g, k, alpha);
    if (!out.integral) continue;
    ++kept;
    const bool lhs = max_clique(g).optimum >= k;
    const bool rhs = reaches_alpha_fraction(max_clique(out.gprime).optimum, alpha, out.n_prime);
    ok += lhs == rhs ? 1 : 0;
  }
  return {ok == 200, fmt("%zu/200 integral instances agree (%zu drawn)", ok, tried)};
}

Verdict dynamics_properties() {
  std::mt19937_64 rng(mix_seed(kMaster, 9));
  std::size_t failures = 0;
  std::size_t worst_rounds = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + rng() % 199;
    const bool alpha = trial % 2 == 1;
    ThresholdRule rule = RThreshold{1 + rng() % 4};
    Graph g = gen_erdos_renyi(n, std::uniform_real_distribution<double>(0.02, 0.5)(rng), rng());
    if (alpha) {
      static const std::vector<Rational> alphas{Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(3, 5)};
      rule = AlphaThreshold{alphas[rng() % alphas.size()]};
      std::size_t d = 1 + rng() % std::min<std::size_t>(n - 1, 24);
      if ((n * d) % 2 == 1) d = d == 1 ? 2 : d - 1;
      if (d >= n) d = n - 1;
      g = (n * d) % 2 == 0 ? gen_random_regular(n, d, rng()) : complete_graph(n);
    }
    const Coloring lower = random_coloring(n, rng() % (n + 1), rng());
    NodeSet upper = lower.blue();
    for (NodeId v = 0; v < n; ++v) {
      if (rng() % 3 == 0) upper.insert(v);
    }
    if (!step(g, lower, rule).blue().is_subset_of(step(g, Coloring(upper), rule).blue())) ++failures;
    try {
      const RunResult res = run(g, lower, rule, n * n);
      worst_rounds = std::max(worst_rounds, res.rounds_to_limit);
      if (res.period > 2) ++failures;
    } catch (const ConvergenceError&) {
      ++failures;
    }
  }
  return {failures == 0, fmt("%zu failures over 1000 instances, max rounds to limit %zu", failures, worst_rounds)};
}

Verdict spectral_values() {
  double worst = 0.0;
  for (std::size_t n = 3; n <= 50; ++n) worst = std::max(worst, std::abs(sigma(complete_graph(n)) - 1.0 / (n - 1.0)));
  const double pet = std::abs(sigma(petersen_graph()) - 2.0 / 3.0);
  double star = 0.0;
  for (std::size_t n = 2; n <= 30; ++n) star = std::max(star, std::abs(sigma(star_graph(n)) - 1.0));
  return {worst <= 1e-9 && pet <= 1e-9 && star <= 1e-9,
          fmt("max error K_n %.2e, Petersen %.2e, star %.2e", worst, pet, star)};
}

Verdict tightness(std::size_t ell) {
  TightnessConfig cfg;
  cfg.ell = ell;
  cfg.master_seed = kMaster;
  const TightnessResult res = tightness_ball(cfg);
  return {res.passed(),
          fmt("ell=%zu b0=%zu cap %.0f, outcome %s after %zu rounds, center blue through %s", res.ell, res.b0,
              res.ball_cap, std::string(to_string(res.outcome)).c_str(), res.rounds,
              res.center_blue_through ? std::to_string(*res.center_blue_through).c_str() : "never")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"alpha-threshold: b0 = ceil(b_high) reaches all_blue", [] { return alpha_side(true); }},
      {"alpha-threshold: b0 = floor(b_low) reaches all_red", [] { return alpha_side(false); }},
      {"expander mixing inequality", mixing},
      {"sigma trend against 2/sqrt(d)", friedman},
      {"stable and target set construction", stable_target},
      {"exact solver shortcuts r=1, r=2", shortcuts},
      {"alpha-stable gadget equivalence", gadget_equivalence},
      {"clique shift equivalence", clique_shift},
      {"dynamics monotonicity and period", dynamics_properties},
      {"closed-form sigma values", spectral_values},
      {"tightness ball, ell = 2", [] { return tightness(2); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu  %s: %s [%.1fs]\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                v.detail.c_str(), secs);
    std::fflush(stdout);
    failed += v.pass ? 0 : 1;
  }
  const Verdict info = tightness(1);
  std::printf("INFO     tightness ball at ell = floor(log_d(n)/2): %s (%s)\n", info.detail.c_str(),
              info.pass ? "all checks hold" : "checks fail");
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
