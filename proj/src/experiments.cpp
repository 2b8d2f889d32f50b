#include "gnpwalk/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "gnpwalk/detail/parallel.hpp"
#include "gnpwalk/oracle.hpp"
#include "gnpwalk/rng.hpp"

namespace gnpwalk {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

/// Observed rate may exceed its bound by 3 sigma of the bound's own binomial
/// fluctuation (plus epsilon for exact-zero bounds).
bool rate_within_bound(double rate, double bound, std::int64_t observations) {
  const double b = std::min(bound, 1.0);
  const double slack = 3.0 * std::sqrt(std::max(0.0, b * (1.0 - b)) / static_cast<double>(observations));
  return rate <= bound + slack + 1e-6;
}

double median_of(std::vector<double> values) {
  if (values.empty()) return kNan;
  std::sort(values.begin(), values.end());
  const std::size_t m = values.size() / 2;
  return values.size() % 2 == 1 ? values[m] : 0.5 * (values[m - 1] + values[m]);
}

void append_real(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

}  // namespace

double PRule::operator()(int n) const {
  const double logn = std::log(static_cast<double>(n));
  switch (kind) {
    case Kind::Constant:
      return param;
    case Kind::Threshold:
      return std::min(1.0, param * logn / n);
    case Kind::Polylog:
      return std::min(1.0, std::pow(logn, param) / n);
  }
  throw std::logic_error("unreachable");
}

std::string PRule::str() const {
  char buf[48];
  const char* name = kind == Kind::Constant ? "constant" : kind == Kind::Threshold ? "threshold" : "polylog";
  std::snprintf(buf, sizeof buf, "%s:%g", name, param);
  return buf;
}

PRule PRule::constant(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("constant rule needs p in [0, 1]");
  return {Kind::Constant, p};
}
PRule PRule::threshold(double kappa) {
  if (!(kappa > 0.0)) throw std::invalid_argument("threshold rule needs kappa > 0");
  return {Kind::Threshold, kappa};
}
PRule PRule::polylog(double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("polylog rule needs beta > 0");
  return {Kind::Polylog, beta};
}

PRule PRule::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("p-rule must be NAME:PARAM, got \"" + text + "\"");
  const std::string name = text.substr(0, colon);
  double param = 0.0;
  try {
    std::size_t pos = 0;
    param = std::stod(text.substr(colon + 1), &pos);
    if (pos != text.size() - colon - 1) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad p-rule parameter in \"" + text + "\"");
  }
  if (name == "constant") return constant(param);
  if (name == "threshold") return threshold(param);
  if (name == "polylog") return polylog(param);
  throw std::invalid_argument("unknown p-rule \"" + name + "\"");
}

void SweepPlan::validate() const {
  if (n_grid.empty()) throw std::invalid_argument("n_grid must be nonempty");
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    if (n_grid[i] < 2) throw std::invalid_argument("n_grid entries must be >= 2");
    if (i > 0 && n_grid[i] <= n_grid[i - 1])
      throw std::invalid_argument("n_grid must be strictly increasing");
  }
  if (replicates < 1) throw std::invalid_argument("replicates must be >= 1");
  if (resample_limit < 0) throw std::invalid_argument("resample_limit must be >= 0");
}

DegreeConcentrationResult degree_concentration_check(int n, double p, double c, int replicates,
                                                     std::uint64_t seed) {
  if (!(n >= 1 && p >= 0.0 && p <= 1.0 && n * p > 0.0)) throw RangeError("need n p > 0");
  if (!(c > 0.0)) throw RangeError("need c > 0");
  if (replicates < 1) throw RangeError("replicates must be >= 1");

  const double np = n * p;
  const double lower_threshold = np - c * std::sqrt(np);
  const double upper_threshold = np + c * std::sqrt(np);
  const StreamKey base(seed);

  std::int64_t lower_violations = 0, upper_violations = 0;
  for (int r = 0; r < replicates; ++r) {
    const Graph g = sample_gnp({n, p, base.child(r).value()});
    for (int v = 0; v < n; ++v) {
      const double d = g.degree(v);
      if (!(d > lower_threshold)) ++lower_violations;
      if (!(d < upper_threshold)) ++upper_violations;
    }
  }

  DegreeConcentrationResult res;
  res.observations = static_cast<std::int64_t>(replicates) * n;
  res.lower_fail_rate = static_cast<double>(lower_violations) / res.observations;
  res.upper_fail_rate = static_cast<double>(upper_violations) / res.observations;
  res.bound_lower = std::exp(-c * c / 2.0);
  res.bound_upper = std::exp(-c * c / (2.0 * (1.0 + c / (3.0 * std::sqrt(np)))));
  res.pass = rate_within_bound(res.lower_fail_rate, res.bound_lower, res.observations) &&
             rate_within_bound(res.upper_fail_rate, res.bound_upper, res.observations);
  return res;
}

EdgeConcentrationResult edge_concentration_check(int n, double p, double c, int replicates,
                                                 std::uint64_t seed) {
  if (!(n >= 1 && p > 0.0 && p <= 1.0)) throw RangeError("need 0 < p <= 1");
  const double scale = std::sqrt(static_cast<double>(n) * n * p);
  if (!(c > 0.0) || c > scale) throw CRangeError("need 0 < c <= n sqrt(p)");
  if (replicates < 1) throw RangeError("replicates must be >= 1");

  const double n2p = static_cast<double>(n) * n * p;
  const StreamKey base(seed);
  std::int64_t violations = 0;
  for (int r = 0; r < replicates; ++r) {
    const Graph g = sample_gnp({n, p, base.child(r).value()});
    const double dev = std::abs(2.0 * static_cast<double>(g.edge_count()) - n2p);
    if (!(dev < c * scale)) ++violations;
  }

  EdgeConcentrationResult res;
  res.replicates = replicates;
  res.fail_rate = static_cast<double>(violations) / replicates;
  res.bound = 2.0 * std::exp(-c * c / 6.0);
  res.pass = rate_within_bound(res.fail_rate, res.bound, replicates);
  return res;
}

double ratio_check(const Graph& g) {
  const double two_e = 2.0 * static_cast<double>(g.edge_count());
  double worst = 0.0;
  for (int j = 0; j < g.n(); ++j) {
    if (g.degree(j) == 0) throw IsolatedVertexError(j);
    worst = std::max(worst, std::abs(two_e / g.degree(j) / g.n() - 1.0));
  }
  return worst;
}

Graph sample_connected(int n, double p, std::uint64_t base_seed, int replicate, int resample_limit,
                       int& attempts_used, std::uint64_t& used_seed) {
  const StreamKey task = StreamKey(base_seed).child(static_cast<std::uint64_t>(n)).child(
      static_cast<std::uint64_t>(replicate));
  for (int attempt = 0;; ++attempt) {
    used_seed = task.child(static_cast<std::uint64_t>(attempt)).value();
    Graph g = sample_gnp({n, p, used_seed});
    attempts_used = attempt;
    if (g.connected() || attempt >= resample_limit) return g;
  }
}

std::vector<SweepRecord> run_sweep(const SweepPlan& plan, unsigned threads,
                                   const SweepObserver& observer) {
  plan.validate();
  const std::size_t rows = plan.n_grid.size() * static_cast<std::size_t>(plan.replicates);
  std::vector<SweepRecord> records(rows);

  detail::parallel_for(rows, threads, [&](std::size_t t) {
    const int n = plan.n_grid[t / plan.replicates];
    const int replicate = static_cast<int>(t % plan.replicates);
    const double p = plan.p_rule(n);

    SweepRecord rec;
    rec.n = n;
    rec.p = p;
    rec.replicate = replicate;

    int attempts = 0;
    const Graph g = sample_connected(n, p, plan.base_seed, replicate, plan.resample_limit,
                                     attempts, rec.seed);
    rec.resamples_used = attempts;
    rec.connected = g.connected();
    rec.edge_count = g.edge_count();
    rec.min_degree = g.min_degree();
    rec.max_degree = g.max_degree();

    SpectralDecomposition d;
    if (rec.connected) {
      d = eigendecompose(build_normalized_adjacency(g));
      rec.ratio_max_dev = ratio_check(g);
      rec.lambda2_abs = std::abs(d.eigenvalues(1));
      rec.lambdaN_abs = std::abs(d.eigenvalues(n - 1));
      rec.gap = spectral_gap(d);
      rec.nu2_over_np = std::abs(adjacency_spectrum(g, p).nu()(1)) / (n * p);
      rec.remainder_norm = gnpwalk::remainder_norm(g, p);

      const Eigen::VectorXd h = random_target_times(g, d);
      rec.h_target_min_over_n = h.minCoeff() / n;
      rec.h_target_mean_over_n = h.mean() / n;
      rec.h_target_max_over_n = h.maxCoeff() / n;
      rec.h_start_over_n = random_start_time(d) / n;
    } else {
      rec.ratio_max_dev = rec.lambda2_abs = rec.lambdaN_abs = rec.gap = kNan;
      rec.nu2_over_np = rec.remainder_norm = kNan;
      rec.h_target_min_over_n = rec.h_target_mean_over_n = rec.h_target_max_over_n = kNan;
      rec.h_start_over_n = kNan;
    }
    records[t] = rec;
    if (observer) observer(t, g, d, records[t]);
  });
  return records;
}

GapTrendResult gap_trend_check(const std::vector<SweepRecord>& records) {
  GapTrendResult res;
  res.all_disconnected = true;
  for (const auto& rec : records) {
    if (res.n_values.empty() || res.n_values.back() != rec.n) {
      res.n_values.push_back(rec.n);
      res.median_lambda2.push_back(kNan);
      res.envelope.push_back(3.0 * std::sqrt((1.0 - rec.p) / (rec.n * rec.p)));
      res.pass.push_back(true);
    }
    if (rec.connected) res.all_disconnected = false;
  }
  for (std::size_t i = 0; i < res.n_values.size(); ++i) {
    std::vector<double> values;
    for (const auto& rec : records)
      if (rec.n == res.n_values[i] && rec.connected) values.push_back(rec.lambda2_abs);
    res.median_lambda2[i] = median_of(std::move(values));
    res.pass[i] = std::isnan(res.median_lambda2[i]) || res.median_lambda2[i] <= res.envelope[i];
  }
  return res;
}

CommutePairStats commute_pair_stats(const Graph& g, const SpectralDecomposition& d, int pairs,
                                    std::uint64_t seed) {
  if (g.n() < 2) throw RangeError("need at least two vertices");
  SplitMix64 rng = StreamKey(seed).generator();
  CommutePairStats stats;
  stats.min_over_n = std::numeric_limits<double>::infinity();
  stats.max_over_n = 0.0;
  for (int k = 0; k < pairs; ++k) {
    const int i = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(g.n())));
    int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(g.n() - 1)));
    if (j >= i) ++j;
    const double kappa = commute_time(g, d, i, j);
    const Bounds b = commute_time_bounds(g, d, i, j);
    const double slack = 1e-10 * std::max(1.0, kappa);
    if (!(b.lower - slack <= kappa && (!std::isfinite(b.upper) || kappa <= b.upper + slack)))
      stats.bounds_hold = false;
    stats.min_over_n = std::min(stats.min_over_n, kappa / g.n());
    stats.max_over_n = std::max(stats.max_over_n, kappa / g.n());
  }
  return stats;
}

std::string sweep_csv_header() {
  return "n,p,seed,replicate,connected,edge_count,min_degree,max_degree,ratio_max_dev,"
         "lambda2_abs,lambdaN_abs,gap,nu2_over_Np,remainder_norm,H_target_min_over_n,"
         "H_target_mean_over_n,H_target_max_over_n,H_start_over_n,resamples_used";
}

std::string sweep_record_csv(const SweepRecord& r) {
  std::string out;
  out.reserve(320);
  out += std::to_string(r.n);
  out += ',';
  append_real(out, r.p);
  out += ',';
  out += std::to_string(r.seed);
  out += ',';
  out += std::to_string(r.replicate);
  out += ',';
  out += r.connected ? '1' : '0';
  out += ',';
  out += std::to_string(r.edge_count);
  out += ',';
  out += std::to_string(r.min_degree);
  out += ',';
  out += std::to_string(r.max_degree);
  for (const double v : {r.ratio_max_dev, r.lambda2_abs, r.lambdaN_abs, r.gap, r.nu2_over_np,
                         r.remainder_norm, r.h_target_min_over_n, r.h_target_mean_over_n,
                         r.h_target_max_over_n, r.h_start_over_n}) {
    out += ',';
    append_real(out, v);
  }
  out += ',';
  out += std::to_string(r.resamples_used);
  return out;
}

void write_sweep_csv(const std::vector<SweepRecord>& records, std::ostream& out) {
  out << sweep_csv_header() << "\n";
  for (const auto& rec : records) out << sweep_record_csv(rec) << "\n";
}

}  // namespace gnpwalk
