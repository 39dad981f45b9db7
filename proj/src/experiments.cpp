#include "thresh/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <set>
#include <thread>

#include "thresh/errors.hpp"
#include "thresh/monopoly.hpp"
#include "thresh/rng.hpp"
#include "thresh/spectral.hpp"

namespace thresh {

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> workers;
  for (std::size_t w = 0; w < threads; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  workers.clear();
  if (failure) std::rethrow_exception(failure);
}

namespace {

struct TrialOutcome {
  Outcome outcome = Outcome::AllRed;
  std::size_t rounds = 0;
};

std::vector<TrialOutcome> run_trials(const Graph& g, const ThresholdRule& rule, std::size_t b0, std::size_t trials,
                                     std::uint64_t master_seed, std::uint64_t stream, std::size_t threads) {
  std::vector<TrialOutcome> out(trials);
  parallel_for(trials, threads, [&](std::size_t t) {
    const Coloring start = random_coloring(g.num_nodes(), b0, mix_seed(master_seed, stream + t));
    const RunResult result = run(g, start, rule, default_max_rounds(g));
    out[t] = {result.outcome, result.rounds_to_limit};
  });
  return out;
}

void header(std::ostream& out, const char* experiment) {
  out << "# thresh " << kVersion << '\n' << "# experiment: " << experiment << '\n';
}

}  // namespace

SweepResult threshold_sweep(const SweepConfig& cfg) {
  if (cfg.trials < 1) throw PreconditionError("trials must be >= 1");
  SweepResult result;
  result.config = cfg;
  const Graph g = gen_random_regular(cfg.n, cfg.d, mix_seed(cfg.master_seed, 0));
  result.sigma = sigma(g);
  result.bounds = alpha_bounds(cfg.n, cfg.alpha, result.sigma);

  std::set<std::size_t> b0s;
  const std::size_t points = std::max<std::size_t>(cfg.points, 2);
  for (std::size_t i = 0; i < points; ++i) b0s.insert(i * cfg.n / (points - 1));
  if (result.bounds.b_low_floor >= 0) b0s.insert(static_cast<std::size_t>(result.bounds.b_low_floor));
  if (result.bounds.b_high_ceil <= static_cast<std::int64_t>(cfg.n)) {
    b0s.insert(static_cast<std::size_t>(result.bounds.b_high_ceil));
  }

  const ThresholdRule rule = AlphaThreshold{cfg.alpha};
  std::uint64_t stream = 1;
  for (std::size_t b0 : b0s) {
    const auto trials = run_trials(g, rule, b0, cfg.trials, cfg.master_seed, stream, cfg.threads);
    stream += cfg.trials;
    SweepRow row;
    row.b0 = b0;
    row.trials = cfg.trials;
    double rounds = 0.0;
    for (const auto& t : trials) {
      row.frac_all_blue += t.outcome == Outcome::AllBlue ? 1.0 : 0.0;
      row.frac_all_red += t.outcome == Outcome::AllRed ? 1.0 : 0.0;
      rounds += static_cast<double>(t.rounds);
      row.max_rounds = std::max(row.max_rounds, t.rounds);
    }
    const auto count = static_cast<double>(cfg.trials);
    row.frac_all_blue /= count;
    row.frac_all_red /= count;
    row.mean_rounds = rounds / count;
    result.rows.push_back(row);
  }
  return result;
}

ScalingResult round_scaling(const ScalingConfig& cfg) {
  if (cfg.trials < 1) throw PreconditionError("trials must be >= 1");
  ScalingResult result;
  result.config = cfg;
  const ThresholdRule rule = AlphaThreshold{cfg.alpha};
  for (std::size_t idx = 0; idx < cfg.ns.size(); ++idx) {
    const std::size_t n = cfg.ns[idx];
    const Graph g = gen_random_regular(n, cfg.d, mix_seed(cfg.master_seed, 1000 + idx));
    ScalingRow row;
    row.n = n;
    row.d = cfg.d;
    row.sigma = sigma(g);
    if (cfg.blue_fraction > 0.0) {
      row.b0 = std::min(n, static_cast<std::size_t>(std::llround(cfg.blue_fraction * static_cast<double>(n))));
    } else {
      const auto bounds = alpha_bounds(n, cfg.alpha, row.sigma);
      row.b0 = static_cast<std::size_t>(std::clamp<std::int64_t>(bounds.b_high_ceil, 0, static_cast<std::int64_t>(n)));
    }
    row.trials = cfg.trials;
    const auto trials = run_trials(g, rule, row.b0, cfg.trials, cfg.master_seed, (idx + 1) * 1000000, cfg.threads);
    double rounds = 0.0;
    for (const auto& t : trials) {
      const bool consensus = t.outcome == Outcome::AllBlue || t.outcome == Outcome::AllRed;
      row.frac_consensus += consensus ? 1.0 : 0.0;
      rounds += static_cast<double>(t.rounds);
      row.max_rounds = std::max(row.max_rounds, t.rounds);
    }
    row.frac_consensus /= static_cast<double>(cfg.trials);
    row.mean_rounds = rounds / static_cast<double>(cfg.trials);
    row.c_fit = static_cast<double>(row.max_rounds) / std::log(static_cast<double>(n));
    result.c_max = std::max(result.c_max, row.c_fit);
    result.rows.push_back(row);
  }
  return result;
}

MixingTerms mixing_terms(const Graph& g, double sigma, const NodeSet& a, const NodeSet& b) {
  const auto n = static_cast<double>(g.num_nodes());
  const auto d = static_cast<double>(g.max_degree());
  const auto sa = static_cast<double>(a.size());
  const auto sb = static_cast<double>(b.size());
  const auto e = static_cast<double>(edge_boundary_count(g, a, b));
  MixingTerms terms;
  terms.deviation = std::abs(e - sa * sb * d / n);
  terms.bound = sigma * d * std::sqrt(std::max(0.0, sa * sb * (1.0 - sa / n) * (1.0 - sb / n)));
  return terms;
}

MixingResult mixing_check(const MixingConfig& cfg) {
  if (cfg.graphs < 1 || cfg.ds.empty()) throw PreconditionError("mixing check needs graphs and degrees");
  MixingResult result;
  result.config = cfg;
  result.rows.resize(cfg.graphs);
  parallel_for(cfg.graphs, cfg.threads, [&](std::size_t i) {
    MixingRow& row = result.rows[i];
    row.graph = i;
    row.n = cfg.n;
    row.d = cfg.ds[i % cfg.ds.size()];
    const Graph g = gen_random_regular(cfg.n, row.d, mix_seed(cfg.master_seed, i));
    row.sigma = sigma(g);
    row.pairs = cfg.pairs / cfg.graphs + (i < cfg.pairs % cfg.graphs ? 1 : 0);
    Rng rng(mix_seed(cfg.master_seed, 1000000 + i));
    for (std::size_t j = 0; j < row.pairs; ++j) {
      const NodeSet a = random_coloring(cfg.n, rng.below(cfg.n + 1), rng.next()).blue();
      const NodeSet b = random_coloring(cfg.n, rng.below(cfg.n + 1), rng.next()).blue();
      const MixingTerms terms = mixing_terms(g, row.sigma, a, b);
      if (terms.deviation > terms.bound + cfg.tolerance) ++row.violations;
      if (terms.bound > 0.0) row.worst_ratio = std::max(row.worst_ratio, terms.deviation / terms.bound);
    }
  });
  for (const auto& row : result.rows) {
    result.total_pairs += row.pairs;
    result.total_violations += row.violations;
  }
  return result;
}

TightnessResult tightness_ball(const TightnessConfig& cfg) {
  TightnessResult result;
  result.config = cfg;
  const Graph g = gen_random_regular(cfg.n, cfg.d, mix_seed(cfg.master_seed, 0));
  if (cfg.center >= cfg.n) throw PreconditionError("ball center out of range");
  result.ell = cfg.ell ? *cfg.ell
                       : static_cast<std::size_t>(std::floor(
                             0.5 * std::log(static_cast<double>(cfg.n)) / std::log(static_cast<double>(cfg.d))));
  const Coloring start = ball_coloring(g, cfg.center, result.ell);
  result.b0 = start.blue_count();
  result.ball_cap = std::pow(static_cast<double>(cfg.d), static_cast<double>(result.ell + 1));

  bool still_blue = true;
  auto watch = [&](std::size_t t, const Coloring& c) {
    if (still_blue && c.is_blue(cfg.center)) {
      result.center_blue_through = t;
    } else {
      still_blue = false;
    }
  };
  const RunResult run_result = run(g, start, AlphaThreshold{cfg.alpha}, default_max_rounds(g), watch);
  result.outcome = run_result.outcome;
  result.rounds = run_result.rounds_to_limit;
  result.b_trace = run_result.b_trace;

  result.all_red = result.outcome == Outcome::AllRed;
  result.rounds_at_least_ell = result.rounds >= result.ell;
  result.center_blue_until_ell_minus_1 =
      result.ell == 0 || (result.center_blue_through && *result.center_blue_through + 1 >= result.ell);
  result.ball_within_cap = static_cast<double>(result.b0) <= result.ball_cap;
  return result;
}

AuditResult target_bound_audit(const AuditConfig& cfg) {
  if (cfg.trials < 1) throw PreconditionError("trials must be >= 1");
  AuditResult result;
  result.config = cfg;
  result.rows.resize(cfg.trials);
  const bool random_graph = cfg.graph.kind == GraphKind::RandomRegular || cfg.graph.kind == GraphKind::ErdosRenyi;
  parallel_for(cfg.trials, cfg.threads, [&](std::size_t i) {
    AuditRow& row = result.rows[i];
    row.trial = i;
    row.seed = mix_seed(cfg.master_seed, i);
    GeneratorSpec spec = cfg.graph;
    if (random_graph) spec.seed = row.seed;
    try {
      const Graph g = generate(spec);
      row.n = g.num_nodes();
      row.d = g.max_degree();
      row.sigma = sigma(g);
      const StableSetReport report = build_target_set(g, cfg.r, row.sigma, row.seed);
      row.beta = report.beta;
      row.floor_beta_n = static_cast<std::size_t>(std::floor(report.beta * static_cast<double>(row.n)));
      row.bound = report.size_bound;
      row.stable_size = report.set.nodes.size();
      row.target_size = report.set.nodes.size();
      row.stable_certified = verify_stable(g, report.set.nodes, RThreshold{cfg.r});
      row.target_certified = verify_target(g, report.set.nodes, RThreshold{cfg.r});
      row.moves = report.moves;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  });
  for (const auto& row : result.rows) result.passed += row.ok() ? 1 : 0;
  return result;
}

void write_csv(std::ostream& out, const SweepResult& r) {
  const auto& c = r.config;
  header(out, "threshold-sweep");
  out << "# graph: random_regular n=" << c.n << " d=" << c.d << " master_seed=" << c.master_seed << '\n'
      << "# rule: alpha=" << c.alpha.str() << " trials=" << c.trials << '\n'
      << std::setprecision(12) << "# sigma=" << r.sigma << " b_low=" << r.bounds.b_low
      << " b_high=" << r.bounds.b_high << " red_base=" << r.bounds.red_base << " blue_base=" << r.bounds.blue_base
      << '\n'
      << "# columns: b0 [nodes], trials, frac_all_blue, frac_all_red, mean_rounds [rounds], max_rounds [rounds]\n"
      << "b0,trials,frac_all_blue,frac_all_red,mean_rounds,max_rounds\n";
  for (const auto& row : r.rows) {
    out << row.b0 << ',' << row.trials << ',' << row.frac_all_blue << ',' << row.frac_all_red << ','
        << row.mean_rounds << ',' << row.max_rounds << '\n';
  }
}

void write_csv(std::ostream& out, const ScalingResult& r) {
  const auto& c = r.config;
  header(out, "round-scaling");
  out << "# graph: random_regular d=" << c.d << " master_seed=" << c.master_seed << '\n'
      << "# rule: alpha=" << c.alpha.str() << " trials=" << c.trials << " blue_fraction=" << c.blue_fraction
      << " (0 = ceil(b_high))\n"
      << std::setprecision(12) << "# c_max=" << r.c_max << " (max rounds / ln n)\n"
      << "n,d,sigma,b0,trials,frac_consensus,mean_rounds,max_rounds,c_fit\n";
  for (const auto& row : r.rows) {
    out << row.n << ',' << row.d << ',' << row.sigma << ',' << row.b0 << ',' << row.trials << ','
        << row.frac_consensus << ',' << row.mean_rounds << ',' << row.max_rounds << ',' << row.c_fit << '\n';
  }
}

void write_csv(std::ostream& out, const MixingResult& r) {
  const auto& c = r.config;
  header(out, "mixing-check");
  out << "# graphs=" << c.graphs << " n=" << c.n << " pairs=" << c.pairs << " tolerance=" << c.tolerance
      << " master_seed=" << c.master_seed << '\n'
      << "# total_pairs=" << r.total_pairs << " total_violations=" << r.total_violations << '\n'
      << std::setprecision(12) << "graph,n,d,sigma,pairs,violations,worst_ratio\n";
  for (const auto& row : r.rows) {
    out << row.graph << ',' << row.n << ',' << row.d << ',' << row.sigma << ',' << row.pairs << ','
        << row.violations << ',' << row.worst_ratio << '\n';
  }
}

void write_csv(std::ostream& out, const TightnessResult& r) {
  const auto& c = r.config;
  header(out, "tightness-ball");
  out << "# graph: random_regular n=" << c.n << " d=" << c.d << " master_seed=" << c.master_seed
      << " rule: alpha=" << c.alpha.str() << " center=" << c.center << '\n'
      << "ell,b0,ball_cap,outcome,rounds,center_blue_through,all_red,rounds_at_least_ell,"
         "center_blue_until_ell_minus_1,ball_within_cap,passed\n"
      << r.ell << ',' << r.b0 << ',' << std::setprecision(12) << r.ball_cap << ',' << to_string(r.outcome) << ','
      << r.rounds << ',' << (r.center_blue_through ? std::to_string(*r.center_blue_through) : "never") << ','
      << r.all_red << ',' << r.rounds_at_least_ell << ',' << r.center_blue_until_ell_minus_1 << ','
      << r.ball_within_cap << ',' << r.passed() << '\n';
}

void write_csv(std::ostream& out, const AuditResult& r) {
  const auto& c = r.config;
  header(out, "target-bound-audit");
  out << "# graph: " << to_string(c.graph.kind) << " n=" << c.graph.n << " d=" << c.graph.d
      << " master_seed=" << c.master_seed << " r=" << c.r << " trials=" << c.trials << '\n'
      << "# passed=" << r.passed << '/' << r.rows.size() << '\n'
      << std::setprecision(12)
      << "trial,seed,n,d,sigma,beta,floor_beta_n,bound,stable_size,stable_certified,target_size,"
         "target_certified,moves,error\n";
  for (const auto& row : r.rows) {
    out << row.trial << ',' << row.seed << ',' << row.n << ',' << row.d << ',' << row.sigma << ',' << row.beta
        << ',' << row.floor_beta_n << ',' << row.bound << ',' << row.stable_size << ',' << row.stable_certified
        << ',' << row.target_size << ',' << row.target_certified << ',' << row.moves << ",\"" << row.error
        << "\"\n";
  }
}

}  // namespace thresh
