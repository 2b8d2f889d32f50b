// Command-line front end: generate G(n,p) graphs, analyze hitting-time
// statistics, run Monte-Carlo walks, and run scaling sweeps.
//
// Exit codes: 0 success, 2 usage error, 3 domain error (disconnected input),
// 4 internal numerical failure.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gnpwalk/experiments.hpp"
#include "gnpwalk/rng.hpp"
#include "gnpwalk/oracle.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNumerical = 4;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw gnpwalk::ParseError("cannot open output file " + path);
  out << text;
}

ordered_json json_or_null(double v) {
  return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr);
}

struct GenOptions {
  int nodes = 0;
  double prob = 0.0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenOptions& opt) {
  const gnpwalk::Graph g = gnpwalk::sample_gnp({opt.nodes, opt.prob, opt.seed});
  write_output(gnpwalk::write_edge_list(g), opt.out);
  return 0;
}

struct AnalyzeOptions {
  std::string graph_file;
  int nodes = 0;
  double prob = -1.0;
  std::uint64_t seed = 0;
  bool has_nodes = false, has_prob = false, has_seed = false;
  std::optional<int> target;
  bool all_targets = false;
  int pairs = 0;
  bool json = false;
  std::string out;
};

int run_analyze(const AnalyzeOptions& opt) {
  gnpwalk::Graph g = opt.graph_file.empty()
                         ? gnpwalk::sample_gnp({opt.nodes, opt.prob, opt.seed})
                         : gnpwalk::read_edge_list_file(opt.graph_file);
  if (!g.connected()) throw gnpwalk::DisconnectedError();

  const auto d = gnpwalk::eigendecompose(gnpwalk::build_normalized_adjacency(g));
  const double lambda2_abs = g.n() >= 2 ? std::abs(d.eigenvalues(1)) : 0.0;
  const double lambdaN_abs = g.n() >= 2 ? std::abs(d.eigenvalues(g.n() - 1)) : 0.0;
  const double gap = gnpwalk::spectral_gap(d);
  const double h_start = gnpwalk::random_start_time(d);

  auto make_report = [&](int j) {
    gnpwalk::HittingReport rep;
    rep.target = j;
    rep.h_target = gnpwalk::random_target_time(g, d, j);
    const gnpwalk::Bounds b = gnpwalk::target_time_bounds(g, d, j);
    rep.lower = b.lower;
    rep.upper = b.upper;
    rep.h_start = h_start;
    rep.gap = gap;
    return rep;
  };

  ordered_json out;
  if (opt.target.has_value()) {
    if (*opt.target < 0 || *opt.target >= g.n())
      throw gnpwalk::RangeError("target vertex out of range");
    out = ordered_json::parse(gnpwalk::hitting_report_json(
        make_report(*opt.target), g.n(), opt.prob, opt.has_prob, opt.seed, opt.has_seed,
        lambda2_abs, lambdaN_abs));
  } else {
    out["n"] = g.n();
    out["p"] = opt.has_prob ? ordered_json(opt.prob) : ordered_json(nullptr);
    out["seed"] = opt.has_seed ? ordered_json(opt.seed) : ordered_json(nullptr);
    ordered_json targets = ordered_json::array();
    const Eigen::VectorXd h = gnpwalk::random_target_times(g, d);
    for (int j = 0; j < g.n(); ++j) {
      const gnpwalk::Bounds b = gnpwalk::target_time_bounds(g, d, j);
      targets.push_back({{"target", j},
                         {"H_target", h(j)},
                         {"lower", b.lower},
                         {"upper", json_or_null(b.upper)}});
    }
    out["targets"] = std::move(targets);
    out["H_start"] = h_start;
    out["gap"] = gap;
    out["lambda2_abs"] = lambda2_abs;
    out["lambdaN_abs"] = lambdaN_abs;
  }

  out["ratio_max_dev"] = gnpwalk::ratio_check(g);
  if (opt.has_prob && opt.prob > 0.0) {
    const gnpwalk::Lambda2Relation rel = gnpwalk::lambda2_relation(g, opt.prob);
    out["lambda2_relation"] = {{"lhs", rel.lhs}, {"rhs", rel.rhs}, {"complete_graph", rel.complete_graph}};
  } else {
    out["lambda2_relation"] = nullptr;
  }

  if (opt.pairs > 0) {
    if (g.n() < 2) throw gnpwalk::RangeError("--pairs needs at least two vertices");
    gnpwalk::SplitMix64 rng = gnpwalk::StreamKey(opt.has_seed ? opt.seed : 0).child(1).generator();
    ordered_json pairs = ordered_json::array();
    for (int k = 0; k < opt.pairs; ++k) {
      const int i = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(g.n())));
      int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(g.n() - 1)));
      if (j >= i) ++j;
      const double kappa = gnpwalk::commute_time(g, d, i, j);
      const gnpwalk::Bounds b = gnpwalk::commute_time_bounds(g, d, i, j);
      pairs.push_back({{"i", i},
                       {"j", j},
                       {"commute", kappa},
                       {"lower", b.lower},
                       {"upper", json_or_null(b.upper)}});
    }
    out["pairs"] = std::move(pairs);
  }

  if (opt.json) {
    write_output(out.dump() + "\n", opt.out);
  } else {
    std::ostringstream text;
    text << "n=" << g.n() << " edges=" << g.edge_count() << " gap=" << gap
         << " H_start=" << h_start << "\n";
    if (opt.target.has_value())
      text << "H_" << *opt.target << "=" << out["H_target"].get<double>() << " in ["
           << out["lower"].get<double>() << ", "
           << (out["upper"].is_null() ? std::string("inf") : std::to_string(out["upper"].get<double>()))
           << "]\n";
    else
      text << "targets=" << g.n() << " (use --json for the full report)\n";
    write_output(text.str(), opt.out);
  }
  return 0;
}

struct SimulateOptions {
  std::string graph_file;
  int source = 0;
  int target = 0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  std::int64_t max_steps = 0;
  unsigned threads = 0;
  std::string out;
};

int run_simulate(const SimulateOptions& opt) {
  const gnpwalk::Graph g = gnpwalk::read_edge_list_file(opt.graph_file);
  if (opt.source < 0 || opt.source >= g.n() || opt.target < 0 || opt.target >= g.n())
    throw gnpwalk::RangeError("vertex out of range");
  if (!g.connected()) throw gnpwalk::DisconnectedError();

  const std::int64_t max_steps = opt.max_steps > 0 ? opt.max_steps : gnpwalk::default_max_steps(g.n());
  const gnpwalk::WalkEstimate est =
      gnpwalk::simulate_walk(g, opt.source, opt.target, opt.samples, opt.seed, max_steps, opt.threads);

  const auto d = gnpwalk::eigendecompose(gnpwalk::build_normalized_adjacency(g));
  const double spectral = gnpwalk::hitting_time_spectral(g, d, opt.source, opt.target);

  ordered_json out;
  out["n"] = g.n();
  out["source"] = opt.source;
  out["target"] = opt.target;
  out["samples"] = est.samples;
  out["seed"] = opt.seed;
  out["max_steps"] = max_steps;
  out["mean"] = est.mean;
  out["std_error"] = est.std_error;
  out["max_steps_hit"] = est.max_steps_hit;
  out["spectral"] = spectral;
  if (est.std_error > 0.0)
    out["z_score"] = (est.mean - spectral) / est.std_error;
  else
    out["z_score"] = std::abs(est.mean - spectral) <= 1e-12 ? ordered_json(0.0) : ordered_json(nullptr);
  write_output(out.dump() + "\n", opt.out);
  return 0;
}

struct SweepOptions {
  std::string n_grid;
  std::string p_rule;
  int replicates = 1;
  std::uint64_t seed = 0;
  int resample_limit = 100;
  unsigned threads = 0;
  std::string out;
};

int run_sweep_cmd(const SweepOptions& opt) {
  gnpwalk::SweepPlan plan;
  std::istringstream grid(opt.n_grid);
  std::string token;
  while (std::getline(grid, token, ',')) {
    if (token.empty()) continue;
    plan.n_grid.push_back(std::stoi(token));
  }
  plan.p_rule = gnpwalk::PRule::parse(opt.p_rule);
  plan.replicates = opt.replicates;
  plan.base_seed = opt.seed;
  plan.resample_limit = opt.resample_limit;
  plan.validate();

  const auto progress = [&](std::size_t, const gnpwalk::Graph&, const gnpwalk::SpectralDecomposition&,
                            const gnpwalk::SweepRecord& rec) {
    std::ostringstream line;
    line << "n=" << rec.n << " replicate=" << rec.replicate + 1 << "/" << plan.replicates
         << (rec.connected ? "" : " (disconnected)") << "\n";
    std::cerr << line.str();
  };
  const auto records = gnpwalk::run_sweep(plan, opt.threads, progress);

  std::ostringstream csv;
  gnpwalk::write_sweep_csv(records, csv);
  write_output(csv.str(), opt.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random-walk hitting-time statistics on G(n,p) graphs"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* cmd_gen = app.add_subcommand("gen", "sample a G(n,p) graph and write its edge list");
  cmd_gen->add_option("--nodes", gen.nodes, "vertex count")->required()->check(CLI::PositiveNumber);
  cmd_gen->add_option("--prob", gen.prob, "edge probability")->required()->check(CLI::Range(0.0, 1.0));
  cmd_gen->add_option("--seed", gen.seed, "RNG seed")->required();
  cmd_gen->add_option("--out", gen.out, "output file (default: stdout)");

  AnalyzeOptions analyze;
  auto* cmd_analyze = app.add_subcommand("analyze", "hitting-time report for one graph");
  auto* graph_opt = cmd_analyze->add_option("--graph", analyze.graph_file, "edge-list file");
  auto* nodes_opt = cmd_analyze->add_option("--nodes", analyze.nodes, "vertex count")
                        ->check(CLI::PositiveNumber)
                        ->excludes(graph_opt);
  auto* prob_opt = cmd_analyze->add_option("--prob", analyze.prob, "edge probability")
                       ->check(CLI::Range(0.0, 1.0));
  auto* seed_opt = cmd_analyze->add_option("--seed", analyze.seed, "RNG seed");
  int analyze_target = 0;
  auto* target_opt = cmd_analyze->add_option("--target", analyze_target, "single target vertex");
  auto* all_opt = cmd_analyze->add_flag("--all-targets", analyze.all_targets,
                                        "report every target (default)")
                      ->excludes(target_opt);
  cmd_analyze->add_option("--pairs", analyze.pairs, "seeded random commute-time pairs")
      ->check(CLI::NonNegativeNumber);
  cmd_analyze->add_flag("--json", analyze.json, "emit the machine-readable JSON report");
  cmd_analyze->add_option("--out", analyze.out, "output file (default: stdout)");

  SimulateOptions simulate;
  auto* cmd_simulate = app.add_subcommand("simulate", "Monte-Carlo hitting-time estimate");
  cmd_simulate->add_option("--graph", simulate.graph_file, "edge-list file")->required();
  cmd_simulate->add_option("--source", simulate.source, "start vertex")->required();
  cmd_simulate->add_option("--target", simulate.target, "target vertex")->required();
  cmd_simulate->add_option("--samples", simulate.samples, "number of walks")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_simulate->add_option("--seed", simulate.seed, "RNG seed")->required();
  cmd_simulate->add_option("--max-steps", simulate.max_steps, "truncation horizon (default 100 n^2)");
  cmd_simulate->add_option("--threads", simulate.threads, "worker threads (default: hardware)");
  cmd_simulate->add_option("--out", simulate.out, "output file (default: stdout)");

  SweepOptions sweep;
  auto* cmd_sweep = app.add_subcommand("sweep", "scaling sweep over an n grid");
  cmd_sweep->add_option("--n-grid", sweep.n_grid, "comma-separated vertex counts")->required();
  cmd_sweep->add_option("--p-rule", sweep.p_rule, "constant:P | threshold:K | polylog:B")->required();
  cmd_sweep->add_option("--replicates", sweep.replicates, "replicates per n")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_sweep->add_option("--seed", sweep.seed, "base seed")->required();
  cmd_sweep->add_option("--resample-limit", sweep.resample_limit, "max resamples per replicate");
  cmd_sweep->add_option("--threads", sweep.threads, "worker threads (default: hardware)");
  cmd_sweep->add_option("--out", sweep.out, "output CSV file (default: stdout)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (cmd_gen->parsed()) return run_gen(gen);
    if (cmd_analyze->parsed()) {
      analyze.has_nodes = nodes_opt->count() > 0;
      analyze.has_prob = prob_opt->count() > 0;
      analyze.has_seed = seed_opt->count() > 0;
      if (analyze.graph_file.empty() &&
          !(analyze.has_nodes && analyze.has_prob && analyze.has_seed)) {
        std::cerr << "analyze needs --graph FILE or all of --nodes/--prob/--seed\n";
        return kExitUsage;
      }
      if (target_opt->count() > 0 && all_opt->count() == 0) analyze.target = analyze_target;
      return run_analyze(analyze);
    }
    if (cmd_simulate->parsed()) {
      if (simulate.source == simulate.target) {
        std::cerr << "--source and --target must differ\n";
        return kExitUsage;
      }
      return run_simulate(simulate);
    }
    if (cmd_sweep->parsed()) return run_sweep_cmd(sweep);
  } catch (const gnpwalk::DisconnectedError&) {
    std::cerr << "graph is disconnected\n";
    return kExitDomain;
  } catch (const gnpwalk::ConvergenceError& e) {
    std::cerr << e.what() << "\n";
    return kExitNumerical;
  } catch (const gnpwalk::SingularSystemError& e) {
    std::cerr << e.what() << "\n";
    return kExitNumerical;
  } catch (const gnpwalk::NumericalError& e) {
    std::cerr << e.what() << "\n";
    return kExitNumerical;
  } catch (const gnpwalk::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
