#include "graphsq/certify.hpp"

namespace graphsq {

namespace {

Verdict from_ordering(std::strong_ordering o) {
  if (o < 0) return Verdict::less;
  if (o > 0) return Verdict::greater;
  return Verdict::equal;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::less: return "less";
    case Verdict::equal: return "equal";
    case Verdict::greater: return "greater";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

double RadiusEvaluation::lower() const { return exact ? exact->lo_double() : iterative.lower; }
double RadiusEvaluation::upper() const { return exact ? exact->hi_double() : iterative.upper; }
double RadiusEvaluation::uncertainty() const {
  return exact ? to_double(exact->width()) : iterative.residual;
}

RadiusEvaluation evaluate(const Graph& g, const EvaluationOptions& options) {
  RadiusEvaluation r;
  r.iterative = spectral_radius(g, options.tolerance);
  if (options.use_exact && g.order() <= kExactOrderCap) r.exact = exact_radius(g, options.exact_width);
  return r;
}

Verdict compare_to(const RadiusEvaluation& r, const Rational& t) {
  if (r.exact) return from_ordering(compare_radius(*r.exact, t));
  const double td = to_double(t);
  if (r.iterative.lower > td) return Verdict::greater;
  if (r.iterative.upper < td) return Verdict::less;
  return Verdict::unknown;
}

Verdict compare(const RadiusEvaluation& a, const RadiusEvaluation& b) {
  if (a.exact && b.exact) return from_ordering(compare_radii(*a.exact, *b.exact));
  if (a.iterative.upper < b.iterative.lower) return Verdict::less;
  if (b.iterative.upper < a.iterative.lower) return Verdict::greater;
  return Verdict::unknown;
}

}  // namespace graphsq
