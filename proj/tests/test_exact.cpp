#include <doctest.h>

#include <cmath>

#include "graphsq/certify.hpp"
#include "graphsq/enumerate.hpp"
#include "graphsq/exact.hpp"
#include "graphsq/families.hpp"
#include "oracles.hpp"

using namespace graphsq;

namespace {
std::vector<BigInt> poly(std::initializer_list<long> c) {
  std::vector<BigInt> out;
  for (long x : c) out.emplace_back(x);
  return out;
}
const Rational kFine(1, BigInt(1) << 40);
}  // namespace

TEST_CASE("characteristic polynomials") {
  CHECK(characteristic_polynomial(path(3)) == poly({1, 0, -2, 0}));
  CHECK(characteristic_polynomial(complete(3)) == poly({1, 0, -3, -2}));
  CHECK(characteristic_polynomial(path(1)) == poly({1, 0}));
  CHECK(characteristic_polynomial(power(cycle(6), 2)) == poly({1, 0, -12, -16, 0, 0, 0}));
  // K_4 minus an edge: x^4 - 5x^2 - 4x.
  CHECK(characteristic_polynomial(power(path(4), 2)) == poly({1, 0, -5, -4, 0}));
  CHECK(format_polynomial(poly({1, 0, -2, 0})) == "x^3 - 2x");
  CHECK(format_polynomial(poly({1, 0, -3, -2})) == "x^3 - 3x - 2");
}

TEST_CASE("isolating intervals") {
  auto p3 = exact_radius(path(3), kFine);
  CHECK(p3.lo < p3.hi);
  CHECK(p3.width() <= kFine);
  CHECK(p3.lo_double() <= std::sqrt(2.0));
  CHECK(std::sqrt(2.0) <= p3.hi_double() + 1e-15);
  CHECK_FALSE(p3.integer_value.has_value());

  auto k3 = exact_radius(complete(3), kFine);
  REQUIRE(k3.integer_value.has_value());
  CHECK(*k3.integer_value == 2);

  auto p4sq = exact_radius(power(path(4), 2), kFine);
  CHECK(std::fabs(p4sq.midpoint_double() - (1 + std::sqrt(17.0)) / 2) < 1e-11);

  auto empty = exact_radius(Graph::from_edges(3, {}), kFine);
  REQUIRE(empty.integer_value.has_value());
  CHECK(*empty.integer_value == 0);

  auto r = refine(p3, Rational(1, BigInt(1) << 80));
  CHECK(r.width() <= Rational(1, BigInt(1) << 80));
  CHECK(r.lo >= p3.lo);
  CHECK(r.hi <= p3.hi);

  CHECK_THROWS_AS(exact_radius(path(13), kFine), std::invalid_argument);
  CHECK_THROWS_AS(exact_radius(path(3), Rational(0)), std::invalid_argument);
}

TEST_CASE("threshold comparisons") {
  auto c6sq = exact_radius(power(cycle(6), 2), kFine);
  CHECK(compare_radius(c6sq, 4) == std::strong_ordering::equal);
  CHECK(compare_radius(c6sq, Rational(399, 100)) == std::strong_ordering::greater);
  CHECK(compare_radius(c6sq, Rational(401, 100)) == std::strong_ordering::less);
  auto p3 = exact_radius(path(3), kFine);
  CHECK(compare_radius(p3, Rational(141421356, 100000000)) == std::strong_ordering::greater);
  CHECK(compare_radius(p3, Rational(141421357, 100000000)) == std::strong_ordering::less);
  CHECK(compare_radius(p3, p3.lo) == std::strong_ordering::greater);
  CHECK(compare_radius(p3, p3.hi) == std::strong_ordering::less);
  auto t5 = exact_radius(power(tadpole(5), 2), kFine);
  CHECK(compare_radius(t5, 4) == std::strong_ordering::less);
}

TEST_CASE("radius comparisons") {
  auto p5 = exact_radius(power(path(5), 2), kFine);
  auto s = exact_radius(power(spider(2, 2, 0), 2), kFine);
  CHECK(compare_radii(p5, s) == std::strong_ordering::equal);
  // Equal radii with different polynomials: K_4 and K_4 plus isolated vertices.
  auto k4 = exact_radius(complete(4), kFine);
  auto k4plus = exact_radius(Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}), kFine);
  CHECK(compare_radii(k4, k4plus) == std::strong_ordering::equal);
  // Irrational equal radii: P_3 and P_3 plus an isolated vertex.
  auto p3 = exact_radius(path(3), kFine);
  auto p3plus = exact_radius(Graph::from_edges(4, {{0, 1}, {1, 2}}), kFine);
  CHECK(compare_radii(p3, p3plus) == std::strong_ordering::equal);
  auto sp = exact_radius(power(spider(2, 2, 1), 2), kFine);
  auto p6 = exact_radius(power(path(6), 2), kFine);
  CHECK(compare_radii(sp, p6) == std::strong_ordering::greater);
  CHECK(compare_radii(p6, sp) == std::strong_ordering::less);
}

TEST_CASE("oracle agrees with Jacobi on connected graphs of order 6") {
  for (const auto& g : all_connected(6)) {
    auto r = exact_radius(g, kFine);
    double ref = oracle::jacobi_largest(g);
    CHECK(r.lo_double() <= ref + 1e-12);
    CHECK(ref <= r.hi_double() + 1e-12);
  }
}

TEST_CASE("oracle agrees with Jacobi on every unicyclic square of order 9") {
  for (const auto& u : all_unicyclic(9)) {
    auto sq = power(u, 2);
    CHECK(std::fabs(exact_radius(sq, kFine).midpoint_double() - oracle::jacobi_largest(sq)) < 1e-10);
  }
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("4") == 4);
  CHECK(parse_rational("-3") == -3);
  CHECK(parse_rational("4.25") == Rational(17, 4));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(parse_rational("17/4") == Rational(17, 4));
  CHECK_THROWS(parse_rational(""));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK(to_double(Rational(1, 4)) == 0.25);
}

TEST_CASE("certified evaluation") {
  auto a = evaluate(power(cycle(6), 2));
  REQUIRE(a.exact.has_value());
  CHECK(compare_to(a, 4) == Verdict::equal);
  auto b = evaluate(power(tadpole(6), 2));
  CHECK(compare(b, a) == Verdict::less);
  CHECK(compare(a, b) == Verdict::greater);
  // Above the oracle cap only the float bounds remain.
  auto big = evaluate(power(cycle(20), 2));
  CHECK_FALSE(big.exact.has_value());
  CHECK(compare_to(big, Rational(39, 10)) == Verdict::greater);
  CHECK(compare_to(big, 4) == Verdict::unknown);
  auto t = evaluate(power(tadpole(20), 2));
  CHECK(compare(t, big) == Verdict::less);
  CHECK(std::string(to_string(Verdict::unknown)) == "unknown");
}
