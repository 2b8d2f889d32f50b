#include "gnpwalk/spectral.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace gnpwalk {

namespace {

void require_no_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0) throw IsolatedVertexError(v);
}

/// Flips the row so its largest-magnitude entry (lowest index on ties) is
/// positive.
void sign_fix_row(Eigen::MatrixXd& m, int row) {
  const int n = static_cast<int>(m.cols());
  int arg = 0;
  double best = std::abs(m(row, 0));
  for (int j = 1; j < n; ++j) {
    const double a = std::abs(m(row, j));
    if (a > best) {
      best = a;
      arg = j;
    }
  }
  if (m(row, arg) < 0.0) m.row(row) = -m.row(row);
}

}  // namespace

double SpectralDecomposition::subdominant_modulus() const {
  const int sz = n();
  if (sz < 2) return 0.0;
  return std::max(std::abs(eigenvalues(1)), std::abs(eigenvalues(sz - 1)));
}

Eigen::MatrixXd build_normalized_adjacency(const Graph& g) {
  require_no_isolated_vertex(g);
  const int n = g.n();
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j : g.neighbors(i)) {
      if (j <= i) continue;
      const double value = 1.0 / std::sqrt(static_cast<double>(g.degree(i)) * g.degree(j));
      b(i, j) = value;
      b(j, i) = value;
    }
  }
  return b;
}

SpectralDecomposition eigendecompose(const Eigen::MatrixXd& b) {
  if (b.rows() != b.cols()) throw std::invalid_argument("matrix must be square");
  const double asym = (b - b.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12) throw std::invalid_argument("matrix is not symmetric");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
  if (solver.info() != Eigen::Success)
    throw ConvergenceError("symmetric eigensolver did not converge");

  const int n = static_cast<int>(b.rows());
  SpectralDecomposition d;
  d.eigenvalues.resize(n);
  d.eigenvectors.resize(n, n);
  // Eigen returns ascending order; store descending with eigenvectors as rows.
  for (int k = 0; k < n; ++k) {
    d.eigenvalues(k) = solver.eigenvalues()(n - 1 - k);
    d.eigenvectors.row(k) = solver.eigenvectors().col(n - 1 - k).transpose();
  }
  for (int k = 0; k < n; ++k) sign_fix_row(d.eigenvectors, k);
  d.perron_aligned = d.eigenvectors.row(0).minCoeff() >= -1e-10;
  return d;
}

double perron_vector_check(const Graph& g, const SpectralDecomposition& d) {
  const double two_e = 2.0 * static_cast<double>(g.edge_count());
  double worst = 0.0;
  for (int j = 0; j < g.n(); ++j) {
    const double expected = std::sqrt(g.degree(j) / two_e);
    worst = std::max(worst, std::abs(d.eigenvectors(0, j) - expected));
  }
  return worst;
}

double spectral_gap(const SpectralDecomposition& d) { return 1.0 - d.subdominant_modulus(); }

double remainder_norm(const Graph& g, double p) {
  require_no_isolated_vertex(g);
  if (!(p > 0.0 && p <= 1.0)) throw RangeError("remainder norm requires 0 < p <= 1");
  const double np = g.n() * p;
  double worst = 0.0;
  for (int i = 0; i < g.n(); ++i) {
    double row_sum = 0.0;
    for (int j : g.neighbors(i)) {
      const double root = std::sqrt(static_cast<double>(g.degree(i)) * g.degree(j));
      row_sum += std::abs(np - root) / (np * root);
    }
    worst = std::max(worst, row_sum);
  }
  return worst;
}

Lambda2Relation lambda2_relation(const Graph& g, double p) {
  if (!g.connected()) throw DisconnectedError();
  Lambda2Relation rel;
  rel.complete_graph =
      g.edge_count() == static_cast<std::int64_t>(g.n()) * (g.n() - 1) / 2;

  const SpectralDecomposition d = eigendecompose(build_normalized_adjacency(g));
  rel.lhs = d.n() >= 2 ? std::abs(d.eigenvalues(1)) : 0.0;

  const AdjacencySpectrum spec = adjacency_spectrum(g, p);
  const double nu2 = spec.nu().size() >= 2 ? std::abs(spec.nu()(1)) : 0.0;
  rel.rhs = nu2 / (g.n() * p) + remainder_norm(g, p);
  return rel;
}

AdjacencySpectrum adjacency_spectrum(const Graph& g, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw RangeError("edge probability must lie in [0, 1]");
  const int n = g.n();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j : g.neighbors(i)) a(i, j) = 1.0;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw ConvergenceError("symmetric eigensolver did not converge");

  Eigen::VectorXd nu(n);
  for (int k = 0; k < n; ++k) nu(k) = solver.eigenvalues()(n - 1 - k);

  std::optional<Eigen::VectorXd> mu;
  if (p > 0.0 && p < 1.0) mu = nu / std::sqrt(n * p * (1.0 - p));
  return AdjacencySpectrum(std::move(nu), std::move(mu));
}

SpectralIdentities check_spectral_identities(const Graph& g, const SpectralDecomposition& d) {
  const int n = g.n();
  const double two_e = 2.0 * static_cast<double>(g.edge_count());
  const std::vector<double> pi = stationary_distribution(g);

  Eigen::VectorXd root_deg(n);
  for (int j = 0; j < n; ++j) root_deg(j) = std::sqrt(static_cast<double>(g.degree(j)));

  SpectralIdentities id;
  for (int k = 1; k < n; ++k) {
    const double dot = d.eigenvectors.row(k).dot(root_deg);
    id.perron_orthogonality = std::max(id.perron_orthogonality, std::abs(dot) / std::sqrt(two_e));
  }
  for (int j = 0; j < n; ++j) {
    double total = 0.0, tail = 0.0, weighted = 0.0;
    for (int k = 0; k < n; ++k) {
      const double sq = d.eigenvectors(k, j) * d.eigenvectors(k, j);
      total += sq;
      if (k >= 1) {
        tail += sq;
        weighted += (1.0 - d.eigenvalues(k)) * sq;
      }
    }
    id.column_mass = std::max(id.column_mass, std::abs(total - 1.0));
    id.tail_mass = std::max(id.tail_mass, std::abs(tail - (1.0 - pi[j])));
    id.weighted_tail_mass = std::max(id.weighted_tail_mass, std::abs(weighted - 1.0));
  }
  id.perron_entry = perron_vector_check(g, d);
  return id;
}

}  // namespace gnpwalk
