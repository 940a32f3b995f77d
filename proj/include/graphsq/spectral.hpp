#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "graphsq/graph.hpp"

namespace graphsq {

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr std::size_t kDefaultIterationCap = 1'000'000;

/// Dominant eigenpair of an adjacency matrix.
///
/// `vector` is normalized to unit max-norm. `residual` is the max-norm of
/// A*X - radius*X. `lower` and `upper` are Collatz-Wielandt bounds
/// min_v (AX)_v / X_v and max_v (AX)_v / X_v, widened by a rounding
/// allowance; they bracket the true spectral radius whenever X is
/// strictly positive (otherwise they are -inf / +inf).
struct SpectralResult {
  double radius = 0.0;
  std::vector<double> vector;
  double residual = 0.0;
  std::size_t iterations = 0;
  double lower = 0.0;
  double upper = 0.0;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(std::size_t iterations, double residual);
  std::size_t iterations() const { return iterations_; }
  double residual() const { return residual_; }

 private:
  std::size_t iterations_;
  double residual_;
};

struct SolverOptions {
  double tolerance = kDefaultTolerance;
  std::size_t iteration_cap = kDefaultIterationCap;
  /// Starting vector; defaults to all ones. Must be positive if given.
  std::optional<std::vector<double>> start;
};

/// Power iteration on A + I started from the all-ones vector.
///
/// The +1 shift keeps -rho out of the dominant pair on bipartite graphs.
/// Throws ConvergenceError when the residual does not drop to the
/// tolerance within the iteration cap.
SpectralResult spectral_radius(const Graph& g, const SolverOptions& options);
SpectralResult spectral_radius(const Graph& g, double tol = kDefaultTolerance);

/// X_v plus the sum of X over the neighbors of v in g.
double tilde(const Graph& g, std::span<const double> x, Vertex v);

/// max_v |rho X_v - sum_{u != v, dist_g(u,v) <= 2} X_u| for a result that
/// was computed on power(g, 2).
double check_eigen_equation(const Graph& g, const SpectralResult& result);

}  // namespace graphsq
