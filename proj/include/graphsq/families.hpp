#pragma once

#include <map>
#include <string>

#include "graphsq/graph.hpp"

namespace graphsq {

// Named graph families. Every constructor documents its labeling; the
// labelings are part of the contract (Perron-vector entries are addressed
// by label in tests and reports).

/// 0-1-...-(n-1). n >= 1.
Graph path(std::size_t n);
/// 0-1-...-(n-1)-0. n >= 3.
Graph cycle(std::size_t n);
/// Center 0, leaves 1..n-1. n >= 1.
Graph star(std::size_t n);
Graph complete(std::size_t n);
/// star(n) plus the edge {1,2}. n >= 3.
Graph star_plus(std::size_t n);
/// Triangle on {0,1,2}; the path 2-3-...-(n-1) hangs off vertex 2. n >= 4.
Graph tadpole(std::size_t n);
/// Cycle 0..g-1 with n-g pendant leaves g..n-1 on vertex 0. 3 <= g <= n.
Graph cycle_star(std::size_t n, std::size_t g);
/// Path v_1..v_{d+1} labeled 0..d, with n-d-1 leaves (labels d+1..n-1)
/// on v_i, i.e. on label i-1. d >= 2, 2 <= i <= d, n >= d+1.
Graph broom(std::size_t n, std::size_t d, std::size_t i);
/// Center 0 with three pendant paths of a, b and c edges, laid out leg by
/// leg: 1..a, a+1..a+b, a+b+1..a+b+c (each leg numbered outward).
Graph spider(std::size_t a, std::size_t b, std::size_t c);

/// Parsed form of the text "family:key=value,...", e.g. "broom:n=9,d=4,i=3".
struct FamilySpec {
  std::string family;
  std::map<std::string, std::size_t> params;

  static FamilySpec parse(const std::string& text);
  std::string to_string() const;
  Graph build() const;
};

}  // namespace graphsq
