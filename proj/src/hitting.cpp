#include "gnpwalk/hitting.hpp"

#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

namespace gnpwalk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Eigenvalue 1 must be simple for the k >= 2 sums to converge; connectivity
// guarantees it. Tolerance matches the lambda_1 = 1 check.
void require_simple_top_eigenvalue(const SpectralDecomposition& d) {
  if (d.n() >= 2 && d.eigenvalues(1) >= 1.0 - 1e-10) throw GapZeroDivergenceError();
}

void require_connected(const Graph& g) {
  if (!g.connected()) throw DisconnectedError();
}

void require_distinct(int i, int j) {
  if (i == j) throw SameVertexError();
}

}  // namespace

double hitting_time_spectral(const Graph& g, const SpectralDecomposition& d, int i, int j) {
  require_connected(g);
  require_distinct(i, j);
  require_simple_top_eigenvalue(d);

  const double two_e = 2.0 * static_cast<double>(g.edge_count());
  const double dj = g.degree(j);
  const double root_didj = std::sqrt(static_cast<double>(g.degree(i)) * dj);
  double sum = 0.0;
  for (int k = 1; k < d.n(); ++k) {
    const double vkj = d.eigenvectors(k, j);
    const double vki = d.eigenvectors(k, i);
    sum += (vkj * vkj / dj - vki * vkj / root_didj) / (1.0 - d.eigenvalues(k));
  }
  return two_e * sum;
}

double random_target_time(const Graph& g, const SpectralDecomposition& d, int j) {
  require_connected(g);
  require_simple_top_eigenvalue(d);
  const double two_e = 2.0 * static_cast<double>(g.edge_count());
  double sum = 0.0;
  for (int k = 1; k < d.n(); ++k) {
    const double vkj = d.eigenvectors(k, j);
    sum += vkj * vkj / (1.0 - d.eigenvalues(k));
  }
  return two_e / g.degree(j) * sum;
}

Eigen::VectorXd random_target_times(const Graph& g, const SpectralDecomposition& d) {
  require_connected(g);
  require_simple_top_eigenvalue(d);
  const int n = g.n();
  const double two_e = 2.0 * static_cast<double>(g.edge_count());
  Eigen::VectorXd h(n);
  for (int j = 0; j < n; ++j) {
    double sum = 0.0;
    for (int k = 1; k < n; ++k) {
      const double vkj = d.eigenvectors(k, j);
      sum += vkj * vkj / (1.0 - d.eigenvalues(k));
    }
    h(j) = two_e / g.degree(j) * sum;
  }
  return h;
}

double random_start_time(const SpectralDecomposition& d) {
  require_simple_top_eigenvalue(d);
  double sum = 0.0;
  for (int k = 1; k < d.n(); ++k) sum += 1.0 / (1.0 - d.eigenvalues(k));
  return sum;
}

double commute_time(const Graph& g, const SpectralDecomposition& d, int i, int j) {
  require_connected(g);
  require_distinct(i, j);
  require_simple_top_eigenvalue(d);

  const double two_e = 2.0 * static_cast<double>(g.edge_count());
  const double root_di = std::sqrt(static_cast<double>(g.degree(i)));
  const double root_dj = std::sqrt(static_cast<double>(g.degree(j)));
  double square_form = 0.0;
  for (int k = 1; k < d.n(); ++k) {
    const double diff = d.eigenvectors(k, j) / root_dj - d.eigenvectors(k, i) / root_di;
    square_form += diff * diff / (1.0 - d.eigenvalues(k));
  }
  square_form *= two_e;

  const double pair_sum = hitting_time_spectral(g, d, i, j) + hitting_time_spectral(g, d, j, i);
  if (std::abs(square_form - pair_sum) > 1e-8 * std::max(1.0, std::abs(square_form)))
    throw NumericalError("commute time forms disagree: " + std::to_string(square_form) + " vs " +
                         std::to_string(pair_sum));
  return square_form;
}

Bounds target_time_bounds(const Graph& g, const SpectralDecomposition& d, int j) {
  require_connected(g);
  const double ratio = 2.0 * static_cast<double>(g.edge_count()) / g.degree(j);
  const double modulus = d.subdominant_modulus();
  Bounds b;
  b.lower = ratio - 2.0;
  b.upper = modulus >= 1.0 - 1e-12 ? kInf : (ratio - 1.0) / (1.0 - modulus);
  return b;
}

Bounds commute_time_bounds(const Graph& g, const SpectralDecomposition& d, int i, int j) {
  require_connected(g);
  require_distinct(i, j);
  const double e = static_cast<double>(g.edge_count());
  const double inv_deg = 1.0 / g.degree(i) + 1.0 / g.degree(j);
  const double modulus = d.subdominant_modulus();
  Bounds b;
  b.lower = e * inv_deg;
  b.upper = modulus >= 1.0 - 1e-12 ? kInf : 2.0 * e * inv_deg / (1.0 - modulus);
  return b;
}

std::string hitting_report_json(const HittingReport& report, int n, double p, bool has_p,
                                std::uint64_t seed, bool has_seed, double lambda2_abs,
                                double lambdaN_abs) {
  nlohmann::ordered_json out;
  out["n"] = n;
  out["p"] = has_p ? nlohmann::ordered_json(p) : nlohmann::ordered_json(nullptr);
  out["seed"] = has_seed ? nlohmann::ordered_json(seed) : nlohmann::ordered_json(nullptr);
  out["target"] = report.target;
  out["H_target"] = report.h_target;
  out["lower"] = report.lower;
  out["upper"] = std::isfinite(report.upper) ? nlohmann::ordered_json(report.upper)
                                             : nlohmann::ordered_json(nullptr);
  out["H_start"] = report.h_start;
  out["gap"] = report.gap;
  out["lambda2_abs"] = lambda2_abs;
  out["lambdaN_abs"] = lambdaN_abs;
  return out.dump();
}

}  // namespace gnpwalk
