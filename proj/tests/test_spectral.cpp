#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "gnpwalk/spectral.hpp"

using namespace gnpwalk;

namespace {

/// Every spectrum-level contract the decomposition promises.
void check_decomposition(const Graph& g, const SpectralDecomposition& d) {
  const int n = g.n();
  const Eigen::MatrixXd b = build_normalized_adjacency(g);

  for (int k = 1; k < n; ++k) REQUIRE(d.eigenvalues(k - 1) >= d.eigenvalues(k));

  const Eigen::MatrixXd gram = d.eigenvectors * d.eigenvectors.transpose();
  REQUIRE((gram - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-8);

  double residual = 0.0;
  for (int k = 0; k < n; ++k) {
    const Eigen::VectorXd v = d.eigenvectors.row(k).transpose();
    residual = std::max(residual, (b * v - d.eigenvalues(k) * v).norm());
  }
  REQUIRE(residual <= 1e-8 * n);

  REQUIRE(std::abs(d.eigenvalues.sum()) <= 1e-8);  // zero diagonal

  if (g.connected()) {
    REQUIRE(std::abs(d.eigenvalues(0) - 1.0) <= 1e-10);
    REQUIRE(d.eigenvalues.cwiseAbs().maxCoeff() <= 1.0 + 1e-10);
    REQUIRE(d.perron_aligned);
  }
}

}  // namespace

TEST_CASE("normalized adjacency entries") {
  const Eigen::MatrixXd b2 = build_normalized_adjacency(fixtures::complete(2));
  CHECK(b2(0, 1) == 1.0);
  CHECK(b2(0, 0) == 0.0);

  const Eigen::MatrixXd bp = build_normalized_adjacency(fixtures::path(3));
  CHECK(bp(0, 1) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(bp(1, 2) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(bp(0, 2) == 0.0);

  const Eigen::MatrixXd b3 = build_normalized_adjacency(fixtures::complete(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(b3(i, j) == (i == j ? 0.0 : 0.5));

  CHECK_THROWS_AS(build_normalized_adjacency(Graph::from_edges(3, {{0, 1}})), IsolatedVertexError);
}

TEST_CASE("small-graph spectra") {
  const auto d2 = eigendecompose(build_normalized_adjacency(fixtures::complete(2)));
  CHECK(d2.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d2.eigenvalues(1) == doctest::Approx(-1.0).epsilon(1e-12));

  const auto dp = eigendecompose(build_normalized_adjacency(fixtures::path(3)));
  CHECK(dp.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(dp.eigenvalues(1) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(dp.eigenvalues(2) == doctest::Approx(-1.0).epsilon(1e-12));

  const auto d3 = eigendecompose(build_normalized_adjacency(fixtures::complete(3)));
  CHECK(d3.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d3.eigenvalues(1) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(d3.eigenvalues(2) == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("eigendecompose rejects asymmetric input") {
  Eigen::MatrixXd m(2, 2);
  m << 0.0, 1.0, 0.5, 0.0;
  CHECK_THROWS_AS(eigendecompose(m), std::invalid_argument);
}

TEST_CASE("decomposition contracts hold on fixtures and samples") {
  for (const auto& g : {fixtures::complete(2), fixtures::path(3), fixtures::complete(5),
                        fixtures::cycle(6), fixtures::cycle(7)}) {
    check_decomposition(g, eigendecompose(build_normalized_adjacency(g)));
  }
  int connected_samples = 0;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Graph g = sample_gnp({60, 0.3, seed});
    if (!g.connected()) continue;
    ++connected_samples;
    check_decomposition(g, eigendecompose(build_normalized_adjacency(g)));
  }
  REQUIRE(connected_samples > 0);
}

TEST_CASE("top eigenvector matches the degree profile") {
  const Graph k3 = fixtures::complete(3);
  const auto d3 = eigendecompose(build_normalized_adjacency(k3));
  CHECK(perron_vector_check(k3, d3) <= 1e-8);
  for (int j = 0; j < 3; ++j)
    CHECK(d3.eigenvectors(0, j) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));

  const Graph p3 = fixtures::path(3);
  const auto dp = eigendecompose(build_normalized_adjacency(p3));
  CHECK(perron_vector_check(p3, dp) <= 1e-8);
  CHECK(dp.eigenvectors(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(dp.eigenvectors(0, 1) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(dp.eigenvectors(0, 2) == doctest::Approx(0.5).epsilon(1e-12));

  const Graph k2 = fixtures::complete(2);
  const auto d2 = eigendecompose(build_normalized_adjacency(k2));
  CHECK(d2.eigenvectors(0, 0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(d2.eigenvectors(0, 1) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("spectral gap uses the largest subdominant modulus") {
  CHECK(spectral_gap(eigendecompose(build_normalized_adjacency(fixtures::complete(3)))) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(spectral_gap(eigendecompose(build_normalized_adjacency(fixtures::complete(2)))) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(spectral_gap(eigendecompose(build_normalized_adjacency(fixtures::path(3)))) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("remainder norm vanishes exactly when degrees equal n p") {
  // C_4 at p = 1/2 and K_3 at p = 2/3: n p equals the common degree.
  CHECK(remainder_norm(fixtures::cycle(4), 0.5) == 0.0);
  CHECK(remainder_norm(fixtures::complete(3), 2.0 / 3.0) == 0.0);
  // K_3 at p = 1: every row sums (3-2)/(3*2) over two neighbors.
  CHECK(remainder_norm(fixtures::complete(3), 1.0) == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK_THROWS_AS(remainder_norm(Graph::from_edges(2, {}), 0.5), IsolatedVertexError);
  CHECK_THROWS_AS(remainder_norm(fixtures::complete(3), 0.0), RangeError);
}

TEST_CASE("second eigenvalue bound holds sample by sample") {
  int connected = 0;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Graph g = sample_gnp({80, 0.25, seed});
    if (!g.connected()) continue;
    ++connected;
    const auto rel = lambda2_relation(g, 0.25);
    CHECK(rel.lhs <= rel.rhs + 1e-10);
    CHECK_FALSE(rel.complete_graph);
  }
  REQUIRE(connected >= 8);

  // d-regular with d = n p: remainder vanishes and the bound is tight.
  const auto tight = lambda2_relation(fixtures::cycle(4), 0.5);
  CHECK(tight.lhs == doctest::Approx(tight.rhs).epsilon(1e-12));

  const auto complete = lambda2_relation(fixtures::complete(2), 1.0);
  CHECK(complete.complete_graph);

  CHECK_THROWS_AS(lambda2_relation(fixtures::disconnected4(), 0.5), DisconnectedError);
}

TEST_CASE("adjacency spectrum") {
  const auto k3 = adjacency_spectrum(fixtures::complete(3), 0.5);
  CHECK(k3.nu()(0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(k3.nu()(1) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(k3.nu()(2) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(k3.has_mu_scaled());
  CHECK(k3.mu_scaled()(0) == doctest::Approx(2.0 / std::sqrt(3 * 0.25)).epsilon(1e-12));

  const auto k2 = adjacency_spectrum(fixtures::complete(2), 1.0);
  CHECK(k2.nu()(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(k2.nu()(1) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK_FALSE(k2.has_mu_scaled());
  CHECK_THROWS_AS(k2.mu_scaled(), DegenerateScalingError);

  const auto empty = adjacency_spectrum(Graph::from_edges(3, {}), 0.5);
  for (int k = 0; k < 3; ++k) CHECK(empty.nu()(k) == 0.0);
}

TEST_CASE("exact-decomposition identities hold on samples") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = sample_gnp({70, 0.3, seed});
    if (!g.connected()) continue;
    const auto d = eigendecompose(build_normalized_adjacency(g));
    const auto id = check_spectral_identities(g, d);
    CHECK(id.perron_orthogonality <= 1e-7);
    CHECK(id.column_mass <= 1e-8);
    CHECK(id.tail_mass <= 1e-8);
    CHECK(id.weighted_tail_mass <= 1e-8);
    CHECK(id.perron_entry <= 1e-8);
  }
}

TEST_CASE("spectral radius is bounded by the infinity norm") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = sample_gnp({50, 0.3, seed});
    if (!g.connected()) continue;
    const Eigen::MatrixXd b = build_normalized_adjacency(g);
    const auto d = eigendecompose(b);
    const double inf_norm = b.cwiseAbs().rowwise().sum().maxCoeff();
    CHECK(d.eigenvalues.cwiseAbs().maxCoeff() <= inf_norm + 1e-12);
  }
}
