#pragma once

#include <string>

#include "gnpwalk/spectral.hpp"

namespace gnpwalk {

/// Lower/upper sandwich for a hitting-time quantity. `upper` is +infinity
/// when the spectral gap is zero (bipartite-leaning inputs); that is a
/// reported value, not an error.
struct Bounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Per-target summary for one graph. `gap` uses the subdominant modulus
/// max(|lambda_2|, |lambda_n|).
struct HittingReport {
  int target = 0;
  double h_target = 0.0;  // H_j, steps
  double lower = 0.0;     // 2|E|/d_j - 2
  double upper = 0.0;     // (2|E|/d_j - 1) / gap modulus, may be +inf
  double h_start = 0.0;   // H^i, constant over i
  double gap = 0.0;       // 1 - max(|lambda_2|, |lambda_n|)
};

/// Expected steps for a walk from i to first reach j, evaluated from the
/// eigendecomposition:
///   h_ij = 2|E| sum_{k>=2} (v_kj^2 / d_j - v_ki v_kj / sqrt(d_i d_j)) / (1 - lambda_k).
double hitting_time_spectral(const Graph& g, const SpectralDecomposition& d, int i, int j);

/// H_j = (2|E| / d_j) sum_{k>=2} v_kj^2 / (1 - lambda_k).
double random_target_time(const Graph& g, const SpectralDecomposition& d, int j);

/// H_j for every target from one shared decomposition.
Eigen::VectorXd random_target_times(const Graph& g, const SpectralDecomposition& d);

/// H^i = sum_{k>=2} 1 / (1 - lambda_k), independent of the starting vertex.
/// Throws GapZeroDivergenceError when eigenvalue 1 is not simple.
double random_start_time(const SpectralDecomposition& d);

/// kappa(i, j) = h_ij + h_ji. Evaluates both the pair sum and the spectral
/// square form 2|E| sum_{k>=2} (v_kj/sqrt(d_j) - v_ki/sqrt(d_i))^2 / (1-lambda_k)
/// and requires them to agree within 1e-8 relative.
double commute_time(const Graph& g, const SpectralDecomposition& d, int i, int j);

/// 2|E|/d_j - 2  <=  H_j  <=  (2|E|/d_j - 1) / (1 - gap modulus).
Bounds target_time_bounds(const Graph& g, const SpectralDecomposition& d, int j);

/// |E| (1/d_i + 1/d_j)  <=  kappa(i,j)  <=  2|E| (1/d_i + 1/d_j) / (1 - gap modulus).
Bounds commute_time_bounds(const Graph& g, const SpectralDecomposition& d, int i, int j);

/// Flat JSON object with keys n, p, seed, target, H_target, lower, upper,
/// H_start, gap, lambda2_abs, lambdaN_abs. Unknown p/seed serialize as null;
/// infinite upper serializes as null.
std::string hitting_report_json(const HittingReport& report, int n, double p, bool has_p,
                                std::uint64_t seed, bool has_seed, double lambda2_abs,
                                double lambdaN_abs);

}  // namespace gnpwalk
