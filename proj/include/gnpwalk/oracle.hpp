#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "gnpwalk/graph.hpp"

namespace gnpwalk {

/// Monte-Carlo estimate of a hitting time.
struct WalkEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
  bool max_steps_hit = false;  // some walk was truncated at max_steps
};

/// Ground truth for hitting times into j: solves the first-passage system
///   h_ij = 1 + sum_{l ~ i} h_lj / d_i   for i != j,  h_jj = 0
/// by dense LU with partial pivoting. The returned vector has entry j equal
/// to 0 and every other entry >= 1; the per-equation residual is <= 1e-10.
Eigen::VectorXd hitting_times_linear(const Graph& g, int j);

/// H_j = sum_i pi_i h_ij with h from the linear solve.
double random_target_time_oracle(const Graph& g, int j);

/// Default walk truncation horizon, 100 n^2 steps (worst-case expected
/// hitting times on paths/cycles are Theta(n^2)).
std::int64_t default_max_steps(int n);

/// Simulates `samples` independent walks from i until they first reach j and
/// averages the step counts. Walk s draws from the stream (seed, s), so the
/// estimate is identical for any worker count. Truncated walks contribute
/// max_steps and set max_steps_hit.
WalkEstimate simulate_walk(const Graph& g, int i, int j, std::int64_t samples, std::uint64_t seed,
                           std::int64_t max_steps, unsigned threads = 0);

}  // namespace gnpwalk
