#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace graphsq {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using Rational = boost::multiprecision::cpp_rational;

/// Hop count between two vertices; std::nullopt means no path exists.
using Hops = std::optional<unsigned>;

/// Simple undirected graph on the vertices 0..n-1.
///
/// Immutable after construction. Neighbor lists are kept sorted and an
/// n x n adjacency bitmap backs the O(1) edge query.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate pairs (in either
  /// orientation) collapse to one edge. Throws std::invalid_argument on
  /// n == 0, a self-loop, or an endpoint outside [0, n).
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return neighbors_.size(); }
  std::size_t size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return neighbors_[v]; }
  std::size_t degree(Vertex v) const { return neighbors_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const {
    return matrix_[static_cast<std::size_t>(u) * order() + v] != 0;
  }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Relabels vertex v to perm[v]. perm must be a permutation of 0..n-1.
  Graph relabeled(std::span<const Vertex> perm) const;

  bool operator==(const Graph& other) const {
    return neighbors_ == other.neighbors_;
  }

 private:
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::uint8_t> matrix_;
  std::size_t edge_count_ = 0;
};

/// All-pairs hop distances by breadth-first search.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);

  std::size_t order() const { return n_; }
  /// Distance from u to v, or std::nullopt when they lie in different
  /// components.
  Hops at(Vertex u, Vertex v) const {
    auto d = dist_[static_cast<std::size_t>(u) * n_ + v];
    if (d == kUnreachable) return std::nullopt;
    return d;
  }
  bool within(Vertex u, Vertex v, unsigned k) const {
    auto d = dist_[static_cast<std::size_t>(u) * n_ + v];
    return d != kUnreachable && d <= k;
  }

 private:
  static constexpr std::uint32_t kUnreachable = UINT32_MAX;
  std::size_t n_ = 0;
  std::vector<std::uint32_t> dist_;
};

DistanceMatrix distances(const Graph& g);

/// k-th power: u ~ v iff 1 <= dist(u, v) <= k. Throws on k == 0.
Graph power(const Graph& g, unsigned k);

/// Largest finite distance, or std::nullopt for a disconnected graph.
Hops diameter(const Graph& g);

/// Length of a shortest cycle, or std::nullopt for a forest.
std::optional<unsigned> girth(const Graph& g);

bool is_connected(const Graph& g);

/// Coalescence g1(v1) o g2(v2). Vertices of g1 keep their labels; v2 maps
/// onto v1 and the remaining vertices of g2 follow in their original order,
/// starting at g1.order().
Graph coalesce(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2);

/// Label that vertex x of g2 receives inside coalesce(g1, v1, g2, v2).
Vertex coalesced_label(std::size_t g1_order, Vertex v1, Vertex v2, Vertex x);

/// The pair (h1(v_old) o h2(w), h1(v_new) o h2(w)) under the coalesce
/// labeling, so vertex labels of h1 and h2 mean the same thing in both.
std::pair<Graph, Graph> relocate_branch(const Graph& h1, Vertex v_old,
                                        Vertex v_new, const Graph& h2,
                                        Vertex w);

struct DegreeStats {
  std::size_t max_degree = 0;
  Rational average;  // 2|E| / n
};

DegreeStats degree_stats(const Graph& g);

/// Sorted (non-increasing) degree sequence.
std::vector<std::size_t> degree_sequence(const Graph& g);

Graph without_edges(const Graph& g, std::span<const Edge> removed);
Graph with_edges(const Graph& g, std::span<const Edge> added);
/// Appends a new vertex n adjacent to every vertex in `attach`.
Graph with_vertex(const Graph& g, std::span<const Vertex> attach);

/// graph6 encoding (no ">>graph6<<" header, no trailing newline).
std::string to_graph6(const Graph& g);
/// Throws Graph6Error on malformed input.
Graph from_graph6(std::string_view text);

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace graphsq
