#pragma once

#include <Eigen/Dense>
#include <optional>

#include "gnpwalk/graph.hpp"

namespace gnpwalk {

/// Full eigendecomposition of the normalized adjacency matrix B, eigenvalues
/// in descending order. Row k of `eigenvectors` is the orthonormal
/// eigenvector v_k belonging to eigenvalues[k]. Signs are deterministic:
/// the top row is flipped nonnegative when possible (perron_aligned), every
/// other row is flipped so its largest-magnitude entry is positive.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
  bool perron_aligned = false;

  int n() const { return static_cast<int>(eigenvalues.size()); }

  /// Largest modulus among eigenvalues other than the top one,
  /// max(|lambda_2|, |lambda_n|).
  double subdominant_modulus() const;
};

/// Eigenvalues of the plain adjacency matrix A, descending. The scaled
/// spectrum nu_k / sqrt(n p (1-p)) is defined only for 0 < p < 1.
class AdjacencySpectrum {
 public:
  AdjacencySpectrum(Eigen::VectorXd nu, std::optional<Eigen::VectorXd> mu_scaled)
      : nu_(std::move(nu)), mu_scaled_(std::move(mu_scaled)) {}

  const Eigen::VectorXd& nu() const { return nu_; }
  bool has_mu_scaled() const { return mu_scaled_.has_value(); }

  /// Throws DegenerateScalingError when p was 0 or 1.
  const Eigen::VectorXd& mu_scaled() const {
    if (!mu_scaled_) throw DegenerateScalingError();
    return *mu_scaled_;
  }

 private:
  Eigen::VectorXd nu_;
  std::optional<Eigen::VectorXd> mu_scaled_;
};

struct Lambda2Relation {
  double lhs = 0.0;  // |lambda_2|
  double rhs = 0.0;  // |nu_2| / (n p) + remainder norm
  bool complete_graph = false;
};

/// Deviations of the computed decomposition from identities every exact
/// decomposition of B satisfies. All are maxima over vertices/rows.
struct SpectralIdentities {
  /// max_k>=2 |sum_j v_kj sqrt(d_j)| / sqrt(2|E|)
  double perron_orthogonality = 0.0;
  /// max_j |sum_k v_kj^2 - 1|
  double column_mass = 0.0;
  /// max_j |sum_k>=2 v_kj^2 - (1 - pi_j)|
  double tail_mass = 0.0;
  /// max_j |sum_k>=2 (1 - lambda_k) v_kj^2 - 1|
  double weighted_tail_mass = 0.0;
  /// max_j |v_1j - sqrt(d_j / 2|E|)|
  double perron_entry = 0.0;
};

/// B with entries a_ij / sqrt(d_i d_j); exactly symmetric, zero diagonal.
/// Throws IsolatedVertexError if any degree is 0.
Eigen::MatrixXd build_normalized_adjacency(const Graph& g);

/// Dense symmetric eigendecomposition of B (Householder tridiagonalization
/// plus iterative diagonalization). Input must be symmetric within 1e-12.
SpectralDecomposition eigendecompose(const Eigen::MatrixXd& b);

/// max_j |v_1j - sqrt(d_j / 2|E|)|; callers assert <= 1e-8 on connected input.
double perron_vector_check(const Graph& g, const SpectralDecomposition& d);

/// 1 - max(|lambda_2|, |lambda_n|).
double spectral_gap(const SpectralDecomposition& d);

/// Infinity norm of R in B = A/(np) + R, where
/// r_ij = (np - sqrt(d_i d_j)) / (np sqrt(d_i d_j)) * a_ij.
double remainder_norm(const Graph& g, double p);

/// Both sides of |lambda_2| <= |nu_2|/(np) + ||R||_inf, computed from the
/// same graph. Complete graphs are flagged but still computed.
Lambda2Relation lambda2_relation(const Graph& g, double p);

AdjacencySpectrum adjacency_spectrum(const Graph& g, double p);

SpectralIdentities check_spectral_identities(const Graph& g, const SpectralDecomposition& d);

}  // namespace gnpwalk
