#include <doctest.h>

#include <cmath>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "gnpwalk/hitting.hpp"
#include "gnpwalk/oracle.hpp"

using namespace gnpwalk;

namespace {

SpectralDecomposition decompose(const Graph& g) {
  return eigendecompose(build_normalized_adjacency(g));
}

}  // namespace

TEST_CASE("complete graphs, all sizes 2..8") {
  for (int n = 2; n <= 8; ++n) {
    const Graph g = fixtures::complete(n);
    const auto d = decompose(g);
    const double expected_h = n - 1.0;
    const double expected_target = (n - 1.0) * (n - 1.0) / n;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        CHECK(hitting_time_spectral(g, d, i, j) == doctest::Approx(expected_h).epsilon(1e-10));
      }
    CHECK(random_target_time(g, d, 0) == doctest::Approx(expected_target).epsilon(1e-10));
    CHECK(random_start_time(d) == doctest::Approx(expected_target).epsilon(1e-10));
    CHECK(commute_time(g, d, 0, n - 1) == doctest::Approx(2.0 * (n - 1)).epsilon(1e-10));
  }
}

TEST_CASE("three-vertex path closed forms") {
  const Graph g = fixtures::path(3);
  const auto d = decompose(g);
  CHECK(hitting_time_spectral(g, d, 0, 2) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(hitting_time_spectral(g, d, 1, 2) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(random_target_time(g, d, 2) == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(random_start_time(d) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(commute_time(g, d, 0, 2) == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("four-cycle closed forms") {
  const Graph g = fixtures::cycle(4);
  const auto d = decompose(g);
  CHECK(hitting_time_spectral(g, d, 0, 1) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(hitting_time_spectral(g, d, 0, 2) == doctest::Approx(4.0).epsilon(1e-12));
  for (int j = 0; j < 4; ++j)
    CHECK(random_target_time(g, d, j) == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("two-vertex graph") {
  const Graph g = fixtures::complete(2);
  const auto d = decompose(g);
  CHECK(hitting_time_spectral(g, d, 0, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(random_start_time(d) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(commute_time(g, d, 0, 1) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("spectral values match the linear solve on samples") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = sample_gnp({40, 0.3, seed});
    if (!g.connected()) continue;
    ++checked;
    const auto d = decompose(g);
    for (int j = 0; j < g.n(); j += 7) {
      const Eigen::VectorXd h = hitting_times_linear(g, j);
      for (int i = 0; i < g.n(); ++i) {
        if (i == j) continue;
        const double spectral = hitting_time_spectral(g, d, i, j);
        REQUIRE(std::abs(spectral - h(i)) <= 1e-8 * std::abs(h(i)));
      }
      const double target = random_target_time(g, d, j);
      REQUIRE(std::abs(target - random_target_time_oracle(g, j)) <= 1e-8 * target);
    }
  }
  REQUIRE(checked >= 5);
}

TEST_CASE("start time is the same from every vertex") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = sample_gnp({30, 0.35, seed});
    if (!g.connected()) continue;
    const auto d = decompose(g);
    const double expected = random_start_time(d);
    const auto pi = stationary_distribution(g);

    // The spectral sum must equal sum_j pi_j h_ij for every start i, with h
    // taken from the independent linear solve.
    std::vector<Eigen::VectorXd> columns;
    for (int j = 0; j < g.n(); ++j) columns.push_back(hitting_times_linear(g, j));
    for (int i = 0; i < g.n(); ++i) {
      double start = 0.0;
      for (int j = 0; j < g.n(); ++j) start += pi[j] * columns[j](i);
      REQUIRE(std::abs(start - expected) <= 1e-8 * expected);
    }
  }
}

TEST_CASE("hitting times of vertex-transitive graphs are symmetric") {
  for (const auto& g : {fixtures::cycle(5), fixtures::cycle(6), fixtures::complete(6)}) {
    const auto d = decompose(g);
    for (int i = 0; i < g.n(); ++i)
      for (int j = i + 1; j < g.n(); ++j) {
        const double forward = hitting_time_spectral(g, d, i, j);
        const double backward = hitting_time_spectral(g, d, j, i);
        CHECK(std::abs(forward - backward) <= 1e-8 * forward);
      }
  }
}

TEST_CASE("sandwich bounds on fixtures") {
  const Graph k3 = fixtures::complete(3);
  const auto d3 = decompose(k3);
  const Bounds b3 = target_time_bounds(k3, d3, 0);
  CHECK(b3.lower == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b3.upper == doctest::Approx(4.0).epsilon(1e-10));
  CHECK(random_target_time(k3, d3, 0) >= b3.lower - 1e-10);
  CHECK(random_target_time(k3, d3, 0) <= b3.upper + 1e-10);

  const Bounds c3 = commute_time_bounds(k3, d3, 0, 1);
  CHECK(c3.lower == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(c3.upper == doctest::Approx(12.0).epsilon(1e-10));
  CHECK(commute_time(k3, d3, 0, 1) == doctest::Approx(4.0).epsilon(1e-10));

  // Bipartite graphs have modulus 1: upper bounds are +infinity, reported.
  const Graph k2 = fixtures::complete(2);
  const auto d2 = decompose(k2);
  const Bounds b2 = target_time_bounds(k2, d2, 0);
  CHECK(b2.lower == doctest::Approx(0.0));
  CHECK(std::isinf(b2.upper));
  CHECK(std::isinf(commute_time_bounds(k2, d2, 0, 1).upper));
  CHECK(commute_time_bounds(k2, d2, 0, 1).lower == doctest::Approx(2.0));

  const Graph c4 = fixtures::cycle(4);
  const auto dc4 = decompose(c4);
  const Bounds bc4 = target_time_bounds(c4, dc4, 0);
  CHECK(bc4.lower == doctest::Approx(2.0));
  CHECK(std::isinf(bc4.upper));

  const Graph p3 = fixtures::path(3);
  const auto dp3 = decompose(p3);
  const Bounds cp3 = commute_time_bounds(p3, dp3, 0, 2);
  CHECK(cp3.lower == doctest::Approx(4.0));
  CHECK(std::isinf(cp3.upper));
  CHECK(commute_time(p3, dp3, 0, 2) == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("sandwich bounds on samples") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Graph g = sample_gnp({50, 0.25, seed});
    if (!g.connected()) continue;
    const auto d = decompose(g);
    for (int j = 0; j < g.n(); ++j) {
      const double target = random_target_time(g, d, j);
      const Bounds b = target_time_bounds(g, d, j);
      REQUIRE(target >= b.lower - 1e-10 * std::max(1.0, target));
      if (std::isfinite(b.upper)) REQUIRE(target <= b.upper + 1e-10 * std::max(1.0, target));
    }
  }
}

TEST_CASE("pairwise operations reject bad input") {
  const Graph g = fixtures::complete(3);
  const auto d = decompose(g);
  CHECK_THROWS_AS(hitting_time_spectral(g, d, 1, 1), SameVertexError);
  CHECK_THROWS_AS(commute_time(g, d, 2, 2), SameVertexError);
  CHECK_THROWS_AS(commute_time_bounds(g, d, 0, 0), SameVertexError);

  const Graph split = fixtures::disconnected4();
  const auto dsplit = eigendecompose(build_normalized_adjacency(split));
  CHECK_THROWS_AS(hitting_time_spectral(split, dsplit, 0, 2), DisconnectedError);
  CHECK_THROWS_AS(random_target_time(split, dsplit, 0), DisconnectedError);
  CHECK_THROWS_AS(random_start_time(dsplit), GapZeroDivergenceError);
}

TEST_CASE("report serializes to the flat key set") {
  const Graph g = fixtures::complete(3);
  const auto d = decompose(g);
  HittingReport rep;
  rep.target = 0;
  rep.h_target = random_target_time(g, d, 0);
  const Bounds b = target_time_bounds(g, d, 0);
  rep.lower = b.lower;
  rep.upper = b.upper;
  rep.h_start = random_start_time(d);
  rep.gap = spectral_gap(d);

  const auto parsed = nlohmann::json::parse(
      hitting_report_json(rep, g.n(), 1.0, true, 7, true, 0.5, 0.5));
  for (const char* key : {"n", "p", "seed", "target", "H_target", "lower", "upper", "H_start",
                          "gap", "lambda2_abs", "lambdaN_abs"}) {
    REQUIRE(parsed.contains(key));
  }
  CHECK(parsed.size() == 11);
  CHECK(parsed["H_target"].get<double>() == doctest::Approx(4.0 / 3).epsilon(1e-12));

  // Infinite upper bound and unknown p/seed become null.
  rep.upper = std::numeric_limits<double>::infinity();
  const auto with_inf = nlohmann::json::parse(
      hitting_report_json(rep, g.n(), 0.0, false, 0, false, 1.0, 1.0));
  CHECK(with_inf["upper"].is_null());
  CHECK(with_inf["p"].is_null());
  CHECK(with_inf["seed"].is_null());
}
