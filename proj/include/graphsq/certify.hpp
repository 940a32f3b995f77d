#pragma once

#include <optional>

#include "graphsq/exact.hpp"
#include "graphsq/spectral.hpp"

namespace graphsq {

/// Outcome of a certified comparison. `unknown` only arises when the exact
/// oracle is unavailable and the floating-point bounds overlap.
enum class Verdict { less, equal, greater, unknown };

const char* to_string(Verdict v);

/// Spectral radius of one graph: the iterative result, plus the exact
/// isolating interval when the order allows it.
struct RadiusEvaluation {
  SpectralResult iterative;
  std::optional<ExactRadius> exact;

  double radius() const { return iterative.radius; }
  /// Certified enclosure: the exact interval if present, else the
  /// Collatz-Wielandt bounds.
  double lower() const;
  double upper() const;
  /// Interval width or, lacking the oracle, the iterative residual.
  double uncertainty() const;
};

struct EvaluationOptions {
  double tolerance = kDefaultTolerance;
  bool use_exact = true;
  /// Initial isolating-interval width of the exact oracle (2^-40).
  Rational exact_width = Rational(1, BigInt(1) << 40);
};

RadiusEvaluation evaluate(const Graph& g, const EvaluationOptions& options = {});

Verdict compare_to(const RadiusEvaluation& r, const Rational& t);
Verdict compare(const RadiusEvaluation& a, const RadiusEvaluation& b);

}  // namespace graphsq
