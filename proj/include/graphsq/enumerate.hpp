#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "graphsq/graph.hpp"

namespace graphsq {

inline constexpr std::size_t kTreeOrderCap = 14;
inline constexpr std::size_t kUnicyclicOrderCap = 12;
inline constexpr std::size_t kConnectedOrderCap = 9;

// Every enumeration returns one canonically labeled representative per
// isomorphism class, sorted by canonical graph6 bytes, so the output is
// identical across runs.

/// Trees of order n, 1 <= n <= kTreeOrderCap.
std::vector<Graph> all_trees(std::size_t n);

/// Connected graphs with n vertices and n edges, 3 <= n <= kUnicyclicOrderCap,
/// optionally restricted to girth g (3 <= g <= n).
std::vector<Graph> all_unicyclic(std::size_t n, std::optional<std::size_t> girth = std::nullopt);

/// Trees of order n and diameter d, 2 <= d <= n-1.
std::vector<Graph> all_trees_with_diameter(std::size_t n, std::size_t d);

/// Connected graphs of order n, 1 <= n <= kConnectedOrderCap.
std::vector<Graph> all_connected(std::size_t n);

/// Writes one graph6 string per line.
void write_graph6_lines(std::ostream& os, std::span<const Graph> graphs);

}  // namespace graphsq
