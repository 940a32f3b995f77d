#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "graphsq/graph.hpp"

namespace graphsq {

/// Largest order accepted by canonical_form.
inline constexpr std::size_t kCanonicalOrderCap = 16;

/// graph6 text of the canonically relabeled graph. Equal bytes if and only
/// if the graphs are isomorphic.
struct CanonicalForm {
  std::string bytes;

  auto operator<=>(const CanonicalForm&) const = default;
};

/// lab[v] is the canonical position of vertex v.
std::vector<Vertex> canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

/// True iff some injective map from V(h) to V(g) carries every edge of h to
/// an edge of g (ordinary, not induced, containment).
bool contains_subgraph(const Graph& g, const Graph& h);

enum class GraphClass { tree, unicyclic };

/// strict: members satisfy rho(G^2) > threshold.
/// proper: members satisfy rho(G^2) >= threshold; this is the set whose
/// proper supergraphs exceed the threshold strictly.
enum class ForbiddenMode { strict, proper };

struct ForbiddenSet {
  ForbiddenMode mode = ForbiddenMode::strict;
  /// Minimal members, ordered by (order, canonical bytes).
  std::vector<Graph> graphs;
  /// Graphs whose comparison with the threshold could not be certified
  /// (only possible above the exact oracle's order cap).
  std::vector<Graph> undecided;
};

/// Members of the class with order <= n_max whose squares reach the
/// threshold, reduced to the minimal ones under subgraph containment.
ForbiddenSet minimal_forbidden(GraphClass cls, const Rational& threshold, std::size_t n_max,
                               ForbiddenMode mode = ForbiddenMode::strict, unsigned jobs = 1);

const char* to_string(GraphClass c);
const char* to_string(ForbiddenMode m);

}  // namespace graphsq
