#include "gnpwalk/oracle.hpp"

#include <cmath>

#include <Eigen/LU>

#include "gnpwalk/detail/parallel.hpp"
#include "gnpwalk/rng.hpp"

namespace gnpwalk {

Eigen::VectorXd hitting_times_linear(const Graph& g, int j) {
  if (!g.connected()) throw DisconnectedError();
  const int n = g.n();
  if (n == 1) return Eigen::VectorXd::Zero(1);

  // (I - Q) x = 1 over the n-1 non-target vertices, Q the walk restricted to
  // them. Row/col index: vertex v maps to v - (v > j).
  const int m = n - 1;
  auto idx = [j](int v) { return v < j ? v : v - 1; };
  Eigen::MatrixXd system = Eigen::MatrixXd::Identity(m, m);
  for (int v = 0; v < n; ++v) {
    if (v == j) continue;
    const double inv_deg = 1.0 / g.degree(v);
    for (int w : g.neighbors(v)) {
      if (w == j) continue;
      system(idx(v), idx(w)) -= inv_deg;
    }
  }
  const Eigen::VectorXd rhs = Eigen::VectorXd::Ones(m);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
  Eigen::VectorXd x = lu.solve(rhs);
  // One step of iterative refinement, then enforce the residual contract.
  x += lu.solve(rhs - system * x);
  const double residual = (system * x - rhs).cwiseAbs().maxCoeff();
  if (!std::isfinite(residual) || residual > 1e-10)
    throw SingularSystemError("first-passage solve residual " + std::to_string(residual));

  Eigen::VectorXd h = Eigen::VectorXd::Zero(n);
  for (int v = 0; v < n; ++v) {
    if (v == j) continue;
    h(v) = x(idx(v));
    if (h(v) < 1.0 - 1e-9) throw SingularSystemError("first-passage solution below 1");
  }
  return h;
}

double random_target_time_oracle(const Graph& g, int j) {
  const Eigen::VectorXd h = hitting_times_linear(g, j);
  const std::vector<double> pi = stationary_distribution(g);
  double total = 0.0;
  for (int i = 0; i < g.n(); ++i) total += pi[i] * h(i);
  return total;
}

std::int64_t default_max_steps(int n) { return 100ll * n * n; }

WalkEstimate simulate_walk(const Graph& g, int i, int j, std::int64_t samples, std::uint64_t seed,
                           std::int64_t max_steps, unsigned threads) {
  if (!g.connected()) throw DisconnectedError();
  if (i == j) throw SameVertexError();
  if (samples < 1) throw RangeError("samples must be >= 1");
  if (max_steps < 1) throw RangeError("max_steps must be >= 1");

  const StreamKey base(seed);
  std::vector<std::int64_t> steps(static_cast<std::size_t>(samples));
  bool truncated_any = false;
  std::mutex truncated_mutex;

  detail::parallel_for(static_cast<std::size_t>(samples), threads, [&](std::size_t s) {
    SplitMix64 rng = base.child(s).generator();
    int at = i;
    std::int64_t count = 0;
    bool truncated = true;
    while (count < max_steps) {
      const auto nbrs = g.neighbors(at);
      at = nbrs[rng.next_below(nbrs.size())];
      ++count;
      if (at == j) {
        truncated = false;
        break;
      }
    }
    steps[s] = truncated ? max_steps : count;
    if (truncated) {
      std::lock_guard<std::mutex> lock(truncated_mutex);
      truncated_any = true;
    }
  });

  // Step counts are integers, so the sums below are exact; the reduction
  // order is fixed regardless of how samples were distributed over workers.
  __int128 total = 0;
  for (const std::int64_t v : steps) total += v;
  const double mean = static_cast<double>(total) / static_cast<double>(samples);

  double ss = 0.0;
  for (const std::int64_t v : steps) {
    const double dev = static_cast<double>(v) - mean;
    ss += dev * dev;
  }
  WalkEstimate est;
  est.mean = mean;
  est.std_error =
      samples > 1 ? std::sqrt(ss / (static_cast<double>(samples - 1) * static_cast<double>(samples)))
                  : 0.0;
  est.samples = samples;
  est.max_steps_hit = truncated_any;
  return est;
}

}  // namespace gnpwalk
