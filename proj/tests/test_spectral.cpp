#include <doctest.h>

#include <cmath>

#include "graphsq/enumerate.hpp"
#include "graphsq/families.hpp"
#include "graphsq/spectral.hpp"
#include "oracles.hpp"

using namespace graphsq;

TEST_CASE("known radii") {
  CHECK(spectral_radius(complete(5)).radius == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(spectral_radius(power(cycle(6), 2)).radius == doctest::Approx(4.0).epsilon(1e-12));
  const double p4sq = (1.0 + std::sqrt(17.0)) / 2.0;
  auto r = spectral_radius(power(path(4), 2));
  CHECK(std::fabs(r.radius - p4sq) < 1e-10);
  CHECK(r.lower <= p4sq);
  CHECK(r.upper >= p4sq);
  // Bipartite graphs: the shift keeps -rho from stalling the iteration.
  CHECK(std::fabs(spectral_radius(path(2)).radius - 1.0) < 1e-12);
  CHECK(std::fabs(spectral_radius(star(10)).radius - 3.0) < 1e-12);
  CHECK(spectral_radius(Graph::from_edges(3, {})).radius == 0.0);
}

TEST_CASE("result invariants") {
  auto r = spectral_radius(tadpole(9), 1e-12);
  CHECK(r.residual <= 1e-12);
  double mx = 0;
  for (double x : r.vector) {
    CHECK(x > 0);
    mx = std::max(mx, x);
  }
  CHECK(mx == doctest::Approx(1.0));
  CHECK(r.lower <= r.radius);
  CHECK(r.radius <= r.upper);
  CHECK(r.upper - r.lower < 1e-10);
}

TEST_CASE("agrees with Jacobi eigenvalues on all trees up to order 9") {
  double worst = 0;
  for (std::size_t n = 2; n <= 9; ++n)
    for (const auto& t : all_trees(n)) {
      auto sq = power(t, 2);
      auto r = spectral_radius(sq, 1e-12);
      double ref = oracle::jacobi_largest(sq);
      worst = std::max(worst, std::fabs(r.radius - ref));
      CHECK(r.lower <= ref + 1e-12);
      CHECK(ref <= r.upper + 1e-12);
    }
  CHECK(worst < 1e-10);
}

TEST_CASE("agrees with Jacobi eigenvalues on connected graphs of order 6") {
  for (const auto& g : all_connected(6)) CHECK(std::fabs(spectral_radius(g).radius - oracle::jacobi_largest(g)) < 1e-10);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(spectral_radius(path(3), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(spectral_radius(Graph{}), std::invalid_argument);
  SolverOptions o;
  o.iteration_cap = 2;
  o.tolerance = 1e-15;
  try {
    spectral_radius(tadpole(40), o);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.iterations() == 2);
    CHECK(e.residual() > 1e-15);
  }
}

TEST_CASE("tilde") {
  std::vector<double> ones{1, 1, 1};
  CHECK(tilde(path(3), ones, 1) == 3.0);
  auto r = spectral_radius(complete(3));
  for (Vertex v = 0; v < 3; ++v) CHECK(tilde(complete(3), r.vector, v) == doctest::Approx(3 * r.vector[0]));
  // Mirror symmetry along the path for the Perron vector of P_n^2.
  for (std::size_t n = 4; n <= 12; ++n) {
    auto p = path(n);
    auto x = spectral_radius(power(p, 2)).vector;
    for (Vertex k = 0; k < n; ++k)
      CHECK(std::fabs(tilde(p, x, k) - tilde(p, x, static_cast<Vertex>(n - 1 - k))) < 1e-10);
  }
}

TEST_CASE("eigen equation check") {
  auto c5 = cycle(5);
  auto r = spectral_radius(power(c5, 2));
  CHECK(r.radius == doctest::Approx(4.0));
  CHECK(check_eigen_equation(c5, r) < 1e-12);
  for (std::size_t n = 2; n <= 9; ++n)
    for (const auto& t : all_trees(n)) CHECK(check_eigen_equation(t, spectral_radius(power(t, 2), 1e-12)) <= 1e-10);
  auto bad = r;
  bad.vector[0] *= 1.01;
  CHECK(check_eigen_equation(c5, bad) > 1e-12);
}
