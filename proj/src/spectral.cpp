#include "graphsq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace graphsq {

namespace {

std::string convergence_message(std::size_t iterations, double residual) {
  std::ostringstream os;
  os << "power iteration did not converge after " << iterations
     << " iterations (residual " << residual << ")";
  return os.str();
}

void multiply(const Graph& g, std::span<const double> x, std::span<double> y) {
  for (Vertex v = 0; v < g.order(); ++v) {
    double s = 0.0;
    for (Vertex u : g.neighbors(v)) s += x[u];
    y[v] = s;
  }
}

double max_abs(std::span<const double> x) {
  double m = 0.0;
  for (double a : x) m = std::max(m, std::fabs(a));
  return m;
}

}  // namespace

ConvergenceError::ConvergenceError(std::size_t iterations, double residual)
    : std::runtime_error(convergence_message(iterations, residual)),
      iterations_(iterations),
      residual_(residual) {}

SpectralResult spectral_radius(const Graph& g, double tol) {
  SolverOptions o;
  o.tolerance = tol;
  return spectral_radius(g, o);
}

SpectralResult spectral_radius(const Graph& g, const SolverOptions& options) {
  const auto n = g.order();
  if (n == 0) throw std::invalid_argument("spectral_radius: empty graph");
  if (!(options.tolerance > 0.0)) throw std::invalid_argument("spectral_radius: tol must be > 0");

  std::vector<double> x(n, 1.0), ax(n), next(n);
  if (options.start) {
    if (options.start->size() != n) throw std::invalid_argument("spectral_radius: start vector size");
    x = *options.start;
    if (std::any_of(x.begin(), x.end(), [](double a) { return !(a > 0.0); }))
      throw std::invalid_argument("spectral_radius: start vector must be positive");
    double m = max_abs(x);
    for (double& a : x) a /= m;
  }

  SpectralResult r;
  double residual = std::numeric_limits<double>::infinity();
  for (std::size_t it = 0; it <= options.iteration_cap; ++it) {
    multiply(g, x, ax);
    // Rayleigh quotient of A at the current iterate.
    double num = 0.0, den = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      num += x[v] * ax[v];
      den += x[v] * x[v];
    }
    const double rho = num / den;
    residual = 0.0;
    for (std::size_t v = 0; v < n; ++v) residual = std::max(residual, std::fabs(ax[v] - rho * x[v]));
    if (residual <= options.tolerance) {
      r.radius = rho;
      r.residual = residual;
      r.iterations = it;
      r.vector = x;
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      bool positive = true;
      for (std::size_t v = 0; v < n; ++v) {
        if (!(x[v] > 0.0)) {
          positive = false;
          break;
        }
        lo = std::min(lo, ax[v] / x[v]);
        hi = std::max(hi, ax[v] / x[v]);
      }
      if (positive) {
        // Each ratio carries at most ~(deg+2) roundings.
        const double slack = 4.0 * static_cast<double>(n + 2) * std::numeric_limits<double>::epsilon();
        r.lower = lo - slack * std::max(1.0, std::fabs(lo));
        r.upper = hi + slack * std::max(1.0, std::fabs(hi));
      } else {
        r.lower = -std::numeric_limits<double>::infinity();
        r.upper = std::numeric_limits<double>::infinity();
      }
      return r;
    }
    // x <- (A + I) x, renormalized to unit max-norm.
    for (std::size_t v = 0; v < n; ++v) next[v] = ax[v] + x[v];
    const double m = max_abs(next);
    for (std::size_t v = 0; v < n; ++v) x[v] = next[v] / m;
  }
  throw ConvergenceError(options.iteration_cap, residual);
}

double tilde(const Graph& g, std::span<const double> x, Vertex v) {
  if (x.size() != g.order()) throw std::invalid_argument("tilde: vector size does not match graph order");
  if (v >= g.order()) throw std::invalid_argument("tilde: vertex out of range");
  double s = x[v];
  for (Vertex u : g.neighbors(v)) s += x[u];
  return s;
}

double check_eigen_equation(const Graph& g, const SpectralResult& result) {
  if (result.vector.size() != g.order())
    throw std::invalid_argument("check_eigen_equation: vector size does not match graph order");
  DistanceMatrix d(g);
  double worst = 0.0;
  for (Vertex v = 0; v < g.order(); ++v) {
    double s = 0.0;
    for (Vertex u = 0; u < g.order(); ++u)
      if (u != v && d.within(u, v, 2)) s += result.vector[u];
    worst = std::max(worst, std::fabs(result.radius * result.vector[v] - s));
  }
  return worst;
}

}  // namespace graphsq
