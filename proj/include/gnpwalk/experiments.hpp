#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "gnpwalk/hitting.hpp"

namespace gnpwalk {

/// Edge-probability rule applied along an n grid.
///   constant(p)    -> p
///   threshold(k)   -> min(1, k log n / n)
///   polylog(b)     -> min(1, (log n)^b / n)
struct PRule {
  enum class Kind { Constant, Threshold, Polylog };
  Kind kind = Kind::Constant;
  double param = 0.0;

  double operator()(int n) const;
  std::string str() const;

  static PRule constant(double p);
  static PRule threshold(double kappa);
  static PRule polylog(double beta);
  /// Parses "constant:P" | "threshold:K" | "polylog:B".
  static PRule parse(const std::string& text);
};

struct SweepPlan {
  std::vector<int> n_grid;  // strictly increasing
  PRule p_rule;
  int replicates = 1;
  std::uint64_t base_seed = 0;
  int resample_limit = 100;

  void validate() const;  // throws std::invalid_argument
};

/// One (n, replicate) row of sweep output. Field order is the CSV column
/// order. All real fields are finite when connected is true; on a
/// resample-limit failure they are NaN and connected is false.
struct SweepRecord {
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;  // derived seed of the recorded sample
  int replicate = 0;
  bool connected = false;
  std::int64_t edge_count = 0;
  int min_degree = 0;
  int max_degree = 0;
  double ratio_max_dev = 0.0;  // max_j |(2|E|/d_j)/n - 1|
  double lambda2_abs = 0.0;
  double lambdaN_abs = 0.0;
  double gap = 0.0;
  double nu2_over_np = 0.0;
  double remainder_norm = 0.0;
  double h_target_min_over_n = 0.0;
  double h_target_mean_over_n = 0.0;
  double h_target_max_over_n = 0.0;
  double h_start_over_n = 0.0;
  int resamples_used = 0;
};

struct DegreeConcentrationResult {
  double lower_fail_rate = 0.0;  // frequency of d_j <= np - c sqrt(np)
  double upper_fail_rate = 0.0;  // frequency of d_j >= np + c sqrt(np)
  double bound_lower = 0.0;      // exp(-c^2/2)
  double bound_upper = 0.0;      // exp(-c^2 / (2 (1 + c / (3 sqrt(np)))))
  std::int64_t observations = 0;
  bool pass = false;
};

struct EdgeConcentrationResult {
  double fail_rate = 0.0;  // frequency of |2|E| - n^2 p| >= c sqrt(n^2 p)
  double bound = 0.0;      // 2 exp(-c^2/6)
  std::int64_t replicates = 0;
  bool pass = false;
};

struct GapTrendResult {
  std::vector<int> n_values;
  std::vector<double> median_lambda2;
  std::vector<double> envelope;  // 3 sqrt((1-p)/(n p))
  std::vector<bool> pass;
  bool all_disconnected = false;  // vacuous pass, no connected rows at all
};

/// Commute-time statistics over seeded random vertex pairs of one graph.
struct CommutePairStats {
  double min_over_n = 0.0;
  double max_over_n = 0.0;
  bool bounds_hold = true;  // sandwich held for every pair (1e-10 slack)
};

/// Empirical tail frequencies of per-vertex degrees against the exponential
/// bounds, over `replicates` independent samples. Passes when each observed
/// rate is at most bound + 3 sqrt(bound (1-bound) / observations) + 1e-6.
DegreeConcentrationResult degree_concentration_check(int n, double p, double c, int replicates,
                                                     std::uint64_t seed);

/// Empirical tail frequency of the edge count. Requires 0 < c <= n sqrt(p)
/// (throws CRangeError above); same pass rule with per-replicate slack.
EdgeConcentrationResult edge_concentration_check(int n, double p, double c, int replicates,
                                                 std::uint64_t seed);

/// max_j |(2|E|/d_j)/n - 1|; throws IsolatedVertexError.
double ratio_check(const Graph& g);

/// Samples G(n, p) with seeds derived from (base_seed, n, replicate,
/// attempt), resampling disconnected draws. Returns the first connected
/// graph, or the last attempt if the limit is exhausted; attempts_used
/// reports how many resamples happened.
Graph sample_connected(int n, double p, std::uint64_t base_seed, int replicate, int resample_limit,
                       int& attempts_used, std::uint64_t& used_seed);

/// Called per completed sweep row, possibly from worker threads; index is
/// the row position. graph/decomposition are only valid for the call.
using SweepObserver =
    std::function<void(std::size_t index, const Graph& graph, const SpectralDecomposition& d,
                       const SweepRecord& record)>;

/// Runs the full spectral pipeline over plan.n_grid x plan.replicates. Rows
/// are ordered by (n, replicate) regardless of worker count; identical plans
/// give identical records.
std::vector<SweepRecord> run_sweep(const SweepPlan& plan, unsigned threads = 0,
                                   const SweepObserver& observer = nullptr);

/// Medians of |lambda_2| per n against the 3 sqrt((1-p)/(n p)) envelope.
GapTrendResult gap_trend_check(const std::vector<SweepRecord>& records);

/// kappa(i,j)/n extremes over `pairs` seeded random distinct pairs.
CommutePairStats commute_pair_stats(const Graph& g, const SpectralDecomposition& d, int pairs,
                                    std::uint64_t seed);

std::string sweep_csv_header();
std::string sweep_record_csv(const SweepRecord& r);
void write_sweep_csv(const std::vector<SweepRecord>& records, std::ostream& out);

}  // namespace gnpwalk
