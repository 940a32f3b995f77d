#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "graphsq/graph.hpp"

namespace graphsq {

using BigInt = boost::multiprecision::cpp_int;

/// Largest order accepted by the exact oracle.
inline constexpr std::size_t kExactOrderCap = 12;

namespace detail {
class SturmChain;
}

/// det(xI - A) in exact integer arithmetic (Faddeev-LeVerrier).
/// Coefficients are listed from x^n down to x^0, so the first entry is 1.
std::vector<BigInt> characteristic_polynomial(const Graph& g);

/// Isolating interval for the largest eigenvalue of an adjacency matrix.
///
/// The characteristic polynomial has exactly one distinct root in
/// (lo, hi], that root is the spectral radius, and no root exceeds hi.
struct ExactRadius {
  std::vector<BigInt> charpoly;
  Rational lo;
  Rational hi;
  /// Set when the spectral radius is an integer (the only rational case,
  /// since the characteristic polynomial is monic).
  std::optional<BigInt> integer_value;
  std::shared_ptr<const detail::SturmChain> chain;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  double midpoint_double() const;
  double lo_double() const;
  double hi_double() const;
};

/// Isolates the spectral radius of g to an interval no wider than `width`
/// by Sturm-counted bisection of (-1, n]. Throws std::invalid_argument when
/// g.order() exceeds kExactOrderCap or width <= 0.
ExactRadius exact_radius(const Graph& g, const Rational& width);

/// Shrinks an existing isolating interval to at most `width`.
ExactRadius refine(const ExactRadius& r, const Rational& width);

/// Exact comparison of the spectral radius against a rational threshold.
std::strong_ordering compare_radius(const ExactRadius& r, const Rational& t);

/// Exact comparison of two spectral radii. Equal values are detected
/// through a common root of both characteristic polynomials.
std::strong_ordering compare_radii(const ExactRadius& a, const ExactRadius& b);

/// Human-readable polynomial, e.g. "x^3 - 2x".
std::string format_polynomial(const std::vector<BigInt>& descending);

/// Parses "4", "-3", "4.25", "1e-3" or "17/4" into an exact rational.
Rational parse_rational(const std::string& text);

double to_double(const Rational& r);

}  // namespace graphsq
