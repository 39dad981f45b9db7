// Command-line front end: graph generation, spectra, dynamics, bounds,
// constructions, exact solvers, reductions and the experiment suite.
//
// Exit codes: 0 success, 1 precondition / input error, 2 invariant violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "thresh/bounds.hpp"
#include "thresh/errors.hpp"
#include "thresh/exact.hpp"
#include "thresh/experiments.hpp"
#include "thresh/generators.hpp"
#include "thresh/monopoly.hpp"
#include "thresh/reductions.hpp"
#include "thresh/spectral.hpp"

namespace {

using json = nlohmann::json;
using namespace thresh;

struct Globals {
  std::uint64_t seed = 0;
  std::string out;
  bool json_summary = false;
};

void emit(const Globals& globals, const std::string& text) {
  if (globals.out.empty() || globals.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(globals.out);
  if (!file) throw ParseError("cannot write '" + globals.out + "'");
  file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json to_json(const NodeSet& s) { return s.members(); }

json to_json(const AlphaBounds& b) {
  return {{"b_low", b.b_low},
          {"b_high", b.b_high},
          {"b_low_floor", b.b_low_floor},
          {"b_high_ceil", b.b_high_ceil},
          {"red_base", b.red_base},
          {"blue_base", b.blue_base},
          {"red_threshold_meaningful", b.red_threshold_meaningful},
          {"blue_threshold_meaningful", b.blue_threshold_meaningful},
          {"red_rounds_meaningful", b.red_rounds_meaningful},
          {"blue_rounds_meaningful", b.blue_rounds_meaningful}};
}

json to_json(const RunResult& r) {
  return {{"outcome", to_string(r.outcome)},
          {"rounds", r.rounds_to_limit},
          {"period", r.period},
          {"b_trace", r.b_trace}};
}

json to_json(const ExactResult& r) {
  json j = {{"feasible", r.feasible},
            {"nodes_explored", r.nodes_explored},
            {"method", to_string(r.method)}};
  if (r.feasible) {
    j["optimum"] = r.optimum;
    j["witness"] = to_json(r.witness);
  } else {
    j["optimum"] = nullptr;
  }
  return j;
}

// Blue set file: JSON object with "nodes", or whitespace-separated ids.
NodeSet read_node_list(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open node list '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::vector<NodeId> ids;
  if (auto first = text.find_first_not_of(" \t\r\n"); first != std::string::npos && text[first] == '{') {
    for (const auto& v : json::parse(text).at("nodes")) ids.push_back(v.get<NodeId>());
  } else {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream row(line);
      long long v = 0;
      while (row >> v) {
        if (v < 0) throw ParseError("negative node id in '" + path + "'");
        ids.push_back(static_cast<NodeId>(v));
      }
      if (!row.eof()) throw ParseError("bad node id in '" + path + "'");
    }
  }
  for (NodeId v : ids) {
    if (v >= n) throw PreconditionError("node id " + std::to_string(v) + " >= n in '" + path + "'");
  }
  return NodeSet(n, ids);
}

// "key=value,key=value" after a "kind:" prefix.
std::map<std::string, std::string> parse_fields(std::string_view text) {
  std::map<std::string, std::string> fields;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw PreconditionError("expected key=value, got '" + std::string(item) + "'");
    fields[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    pos = comma + 1;
  }
  return fields;
}

std::uint64_t to_u64(const std::string& s) {
  std::size_t used = 0;
  const unsigned long long v = std::stoull(s, &used);
  if (used != s.size()) throw PreconditionError("not an unsigned integer: '" + s + "'");
  return v;
}

Coloring initial_coloring(const Graph& g, const std::string& spec, std::uint64_t default_seed) {
  if (spec.starts_with("random:")) {
    auto f = parse_fields(std::string_view(spec).substr(7));
    const std::uint64_t seed = f.contains("seed") ? to_u64(f["seed"]) : default_seed;
    return random_coloring(g.num_nodes(), to_u64(f.at("b0")), seed);
  }
  if (spec.starts_with("ball:")) {
    auto f = parse_fields(std::string_view(spec).substr(5));
    const std::uint64_t v = to_u64(f.at("v"));
    if (v >= g.num_nodes()) throw PreconditionError("ball center >= n");
    return ball_coloring(g, static_cast<NodeId>(v), to_u64(f.at("ell")));
  }
  std::string path = spec;
  if (spec.starts_with("blue-list:")) path = spec.substr(10);
  return Coloring(read_node_list(path, g.num_nodes()));
}

double sigma_option(const std::string& text, const Graph& g) {
  if (text == "auto") return sigma(g);
  return std::stod(text);
}

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_u64(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Threshold dynamics on expanders: simulation, bounds, constructions and exact oracles"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--seed", globals.seed, "Random seed")->capture_default_str();
  app.add_option("--out", globals.out, "Output file (default stdout)");
  app.add_flag("--json", globals.json_summary, "Print a JSON summary on stdout when writing to a file");

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a graph in edge-list format");
  std::string kind = "random_regular";
  std::size_t gen_n = 0;
  std::size_t gen_d = 0;
  double gen_p = 0.0;
  gen->add_option("--kind", kind, "erdos_renyi|random_regular|complete|cycle|path|star|petersen|empty")->required();
  gen->add_option("--n", gen_n, "Node count");
  gen->add_option("--d", gen_d, "Degree (random_regular)");
  gen->add_option("--p", gen_p, "Edge probability (erdos_renyi)");

  // sigma
  auto* sig = app.add_subcommand("sigma", "Normalized-adjacency spectrum summary");
  std::string graph_path;
  bool full_spectrum = false;
  sig->add_option("--graph", graph_path, "Edge-list file")->required();
  sig->add_flag("--full-spectrum", full_spectrum, "Include every eigenvalue");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Run threshold dynamics to its limit");
  std::string rule_text;
  std::string init_text;
  std::size_t max_rounds = 0;
  sim->add_option("--graph", graph_path, "Edge-list file")->required();
  sim->add_option("--rule", rule_text, "r=R or alpha=P/Q")->required();
  sim->add_option("--init", init_text, "blue-list:FILE | random:b0=K,seed=S | ball:v=V,ell=L")->required();
  sim->add_option("--max-rounds", max_rounds, "Round budget (default n^2 + 4)");

  // bounds
  auto* bnd = app.add_subcommand("bounds", "Evaluate every bound for a graph and rule");
  std::string sigma_text = "auto";
  bnd->add_option("--graph", graph_path, "Edge-list file")->required();
  bnd->add_option("--rule", rule_text, "r=R or alpha=P/Q")->required();
  bnd->add_option("--sigma", sigma_text, "auto or a number")->capture_default_str();

  // stable-set / target-set
  std::size_t r_value = 2;
  auto* stable = app.add_subcommand("stable-set", "Construct a certified stable set (r-threshold)");
  auto* target = app.add_subcommand("target-set", "Construct a certified target set (r-threshold)");
  for (auto* cmd : {stable, target}) {
    cmd->add_option("--graph", graph_path, "Edge-list file")->required();
    cmd->add_option("--r", r_value, "Threshold r")->required();
    cmd->add_option("--sigma", sigma_text, "auto or a number")->capture_default_str();
  }

  // exact
  auto* ex = app.add_subcommand("exact", "Exact oracles on small graphs");
  std::string problem;
  std::size_t cap = 0;
  ex->add_option("--graph", graph_path, "Edge-list file")->required();
  ex->add_option("--problem", problem, "min-stable|min-target|max-clique")->required();
  ex->add_option("--rule", rule_text, "r=R or alpha=P/Q (min-stable, min-target)");
  ex->add_option("--cap", cap, "Override the node-count cap (expensive)");

  // reduce
  auto* red = app.add_subcommand("reduce", "Build a hardness gadget");
  std::string gadget;
  std::string alpha_text;
  std::size_t k_value = 0;
  std::string map_path;
  red->add_option("--graph", graph_path, "Edge-list file")->required();
  red->add_option("--gadget", gadget, "alpha-stable|clique-shift")->required();
  red->add_option("--alpha", alpha_text, "p/q")->required();
  red->add_option("--k", k_value, "Clique size (clique-shift)");
  red->add_option("--map", map_path, "Write the node-role map as JSON");

  // experiment
  auto* exp = app.add_subcommand("experiment", "Run an experiment and write CSV");
  std::string exp_name;
  std::size_t exp_n = 0;
  std::string exp_ns;
  std::string exp_ds;
  std::size_t exp_d = 0;
  std::size_t exp_trials = 0;
  std::size_t exp_threads = 0;
  std::size_t exp_ell = 0;
  std::size_t exp_points = 11;
  double exp_fraction = 0.0;
  exp->add_option("name", exp_name, "threshold-sweep|round-scaling|mixing-check|tightness-ball|target-bound-audit")
      ->required();
  exp->add_option("--n", exp_n, "Node count");
  exp->add_option("--ns", exp_ns, "Comma-separated node counts (round-scaling)");
  exp->add_option("--d", exp_d, "Degree");
  exp->add_option("--ds", exp_ds, "Comma-separated degrees (mixing-check)");
  exp->add_option("--alpha", alpha_text, "p/q");
  exp->add_option("--r", r_value, "Threshold r (target-bound-audit)");
  exp->add_option("--trials", exp_trials, "Trials");
  exp->add_option("--threads", exp_threads, "Worker threads (0 = all cores)");
  exp->add_option("--ell", exp_ell, "Ball radius (tightness-ball)");
  exp->add_option("--points", exp_points, "Evenly spaced b0 values (threshold-sweep)");
  exp->add_option("--blue-fraction", exp_fraction, "Initial blue fraction (round-scaling; 0 = ceil(b_high))");
  exp->add_option("--kind", kind, "Graph kind (target-bound-audit)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) {
      GeneratorSpec spec;
      spec.kind = parse_graph_kind(kind);
      spec.n = gen_n;
      spec.d = gen_d;
      spec.p = gen_p;
      spec.seed = globals.seed;
      const Graph g = generate(spec);
      std::ostringstream text;
      write_edge_list(text, g);
      emit(globals, text.str());
      if (globals.json_summary && !globals.out.empty()) {
        std::cout << dump({{"n", g.num_nodes()}, {"m", g.num_edges()}, {"out", globals.out}});
      }
    } else if (sig->parsed()) {
      const Graph g = read_edge_list_file(graph_path);
      const SpectralProfile p = normalized_spectrum(g);
      json j = {{"sigma", p.sigma},   {"gamma", p.gamma}, {"lambda2", p.lambda2},
                {"lambdaN", p.lambda_n}, {"n", g.num_nodes()}, {"m", g.num_edges()},
                {"disconnected", p.disconnected}, {"tolerance", p.tolerance}};
      if (full_spectrum) j["eigenvalues"] = p.eigenvalues;
      emit(globals, dump(j));
    } else if (sim->parsed()) {
      const Graph g = read_edge_list_file(graph_path);
      const ThresholdRule rule = parse_rule(rule_text);
      const Coloring start = initial_coloring(g, init_text, globals.seed);
      const RunResult result = run(g, start, rule, max_rounds == 0 ? default_max_rounds(g) : max_rounds);
      emit(globals, dump(to_json(result)));
    } else if (bnd->parsed()) {
      const Graph g = read_edge_list_file(graph_path);
      const ThresholdRule rule = parse_rule(rule_text);
      const double s = sigma_option(sigma_text, g);
      const BoundsReport report = bounds_report(g.num_nodes(), g.min_degree(), g.max_degree(), s, rule);
      json j = {{"n", report.n},     {"delta", report.min_degree}, {"Delta", report.max_degree},
                {"sigma", report.sigma}, {"gamma", report.gamma},    {"rule", to_string(report.rule)}};
      if (report.alpha) j["alpha"] = to_json(*report.alpha);
      if (report.alpha_irregular) j["alpha_irregular"] = to_json(*report.alpha_irregular);
      if (std::holds_alternative<RThreshold>(rule)) {
        j["beta"] = report.beta ? json(*report.beta) : json(nullptr);
        j["beta_prime"] = report.beta_prime ? json(*report.beta_prime) : json(nullptr);
        j["target_size_bound"] = report.target_size_bound ? json(*report.target_size_bound) : json(nullptr);
        j["beta_meaningful"] = report.beta_meaningful;
      }
      emit(globals, dump(j));
    } else if (stable->parsed() || target->parsed()) {
      const Graph g = read_edge_list_file(graph_path);
      const double s = sigma_option(sigma_text, g);
      const StableSetReport report = stable->parsed() ? construct_stable_set(g, r_value, s, globals.seed)
                                                       : build_target_set(g, r_value, s, globals.seed);
      json j = {{"nodes", to_json(report.set.nodes)},
                {"size", report.set.nodes.size()},
                {"bound", report.size_bound},
                {"beta", report.beta},
                {"sigma", s},
                {"kind", stable->parsed() ? "stable" : "target"},
                {"moves", report.moves},
                {"restarts", report.restarts},
                {"certified", true}};
      if (const auto* rr = std::get_if<RunResult>(&report.set.certificate)) j["run"] = to_json(*rr);
      emit(globals, dump(j));
    } else if (ex->parsed()) {
      const Graph g = read_edge_list_file(graph_path);
      ExactOptions options;
      if (cap > 0) {
        std::cerr << "warning: overriding the solver cap to " << cap << " nodes; this can take very long\n";
        options.enumeration_cap = std::max(options.enumeration_cap, cap);
        options.search_cap = std::max(options.search_cap, cap);
        options.clique_cap = std::max(options.clique_cap, cap);
      }
      ExactResult result;
      if (problem == "max-clique") {
        result = max_clique(g, options);
      } else if (problem == "min-stable" || problem == "min-target") {
        if (rule_text.empty()) throw PreconditionError("--rule is required for " + problem);
        const ThresholdRule rule = parse_rule(rule_text);
        result = problem == "min-stable" ? min_stable_set(g, rule, options) : min_target_set(g, rule, options);
      } else {
        throw PreconditionError("unknown problem '" + problem + "'");
      }
      emit(globals, dump(to_json(result)));
    } else if (red->parsed()) {
      const Graph g = read_edge_list_file(graph_path);
      const Rational alpha = Rational::parse(alpha_text);
      GadgetOutput out;
      if (gadget == "alpha-stable") {
        out = alpha_stable_gadget(g, alpha);
      } else if (gadget == "clique-shift") {
        out = clique_to_alpha_clique(g, k_value, alpha);
      } else {
        throw PreconditionError("unknown gadget '" + gadget + "'");
      }
      std::ostringstream text;
      write_edge_list(text, out.gprime);
      emit(globals, text.str());
      if (!map_path.empty()) {
        json labels = json::array();
        for (const auto& role : out.node_map) labels.push_back(role.label());
        json j = {{"gadget", gadget},   {"alpha", alpha.str()}, {"n", out.n},
                  {"n_prime", out.n_prime}, {"integral", out.integral}, {"labels", labels}};
        if (gadget == "clique-shift") j["k"] = out.k;
        std::ofstream map_file(map_path);
        if (!map_file) throw ParseError("cannot write '" + map_path + "'");
        map_file << dump(j);
      }
      if (globals.json_summary && !globals.out.empty()) {
        std::cout << dump({{"n", out.n}, {"n_prime", out.n_prime}, {"m", out.gprime.num_edges()},
                           {"integral", out.integral}, {"out", globals.out}});
      }
    } else if (exp->parsed()) {
      std::ostringstream csv;
      json summary;
      const Rational alpha = alpha_text.empty() ? Rational(1, 2) : Rational::parse(alpha_text);
      if (exp_name == "threshold-sweep") {
        SweepConfig c;
        if (exp_n) c.n = exp_n;
        if (exp_d) c.d = exp_d;
        if (exp_trials) c.trials = exp_trials;
        c.alpha = alpha;
        c.points = exp_points;
        c.master_seed = globals.seed;
        c.threads = exp_threads;
        const auto r = threshold_sweep(c);
        if (!r.bounds.red_threshold_meaningful || !r.bounds.blue_threshold_meaningful) {
          std::cerr << "warning: bounds are vacuous for this configuration (sigma=" << r.sigma << ")\n";
        }
        write_csv(csv, r);
        summary = {{"sigma", r.sigma}, {"b_low", r.bounds.b_low}, {"b_high", r.bounds.b_high}};
      } else if (exp_name == "round-scaling") {
        ScalingConfig c;
        if (!exp_ns.empty()) c.ns = parse_list(exp_ns);
        if (exp_d) c.d = exp_d;
        if (exp_trials) c.trials = exp_trials;
        c.alpha = alpha;
        c.blue_fraction = exp_fraction;
        c.master_seed = globals.seed;
        c.threads = exp_threads;
        const auto r = round_scaling(c);
        write_csv(csv, r);
        summary = {{"c_max", r.c_max}};
      } else if (exp_name == "mixing-check") {
        MixingConfig c;
        if (exp_n) c.n = exp_n;
        if (!exp_ds.empty()) c.ds = parse_list(exp_ds);
        if (exp_trials) c.pairs = exp_trials;
        c.master_seed = globals.seed;
        c.threads = exp_threads;
        const auto r = mixing_check(c);
        write_csv(csv, r);
        summary = {{"pairs", r.total_pairs}, {"violations", r.total_violations}};
        if (r.total_violations > 0) {
          emit(globals, csv.str());
          std::cerr << "error: mixing inequality violated " << r.total_violations << " times\n";
          return 2;
        }
      } else if (exp_name == "tightness-ball") {
        TightnessConfig c;
        if (exp_n) c.n = exp_n;
        if (exp_d) c.d = exp_d;
        if (exp->count("--ell") > 0) c.ell = exp_ell;
        c.alpha = alpha;
        c.master_seed = globals.seed;
        const auto r = tightness_ball(c);
        write_csv(csv, r);
        summary = {{"passed", r.passed()}, {"outcome", to_string(r.outcome)}, {"rounds", r.rounds}};
      } else if (exp_name == "target-bound-audit") {
        AuditConfig c;
        if (exp->count("--kind") > 0) c.graph.kind = parse_graph_kind(kind);
        if (exp_n) c.graph.n = exp_n;
        if (exp_d) c.graph.d = exp_d;
        if (exp_trials) c.trials = exp_trials;
        c.r = r_value;
        c.master_seed = globals.seed;
        c.threads = exp_threads;
        const auto r = target_bound_audit(c);
        write_csv(csv, r);
        summary = {{"passed", r.passed}, {"trials", r.rows.size()}};
        if (r.passed != r.rows.size()) {
          emit(globals, csv.str());
          std::cerr << "error: " << r.rows.size() - r.passed << " audit trials failed\n";
          return 2;
        }
      } else {
        throw PreconditionError("unknown experiment '" + exp_name + "'");
      }
      emit(globals, csv.str());
      if (globals.json_summary) std::cout << dump(summary);
    }
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
