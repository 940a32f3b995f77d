#include "graphsq/enumerate.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>

#include "graphsq/families.hpp"
#include "graphsq/iso.hpp"

namespace graphsq {

namespace {

// Canonical bytes -> canonical graph; std::map keeps the output sorted.
using ClassSet = std::map<std::string, Graph>;

void insert_class(ClassSet& set, const Graph& g) {
  auto cf = canonical_form(g);
  if (!set.contains(cf.bytes)) set.emplace(cf.bytes, from_graph6(cf.bytes));
}

std::vector<Graph> values(const ClassSet& set) {
  std::vector<Graph> out;
  out.reserve(set.size());
  for (const auto& [key, g] : set) out.push_back(g);
  return out;
}

// Enumerations build on smaller orders; results are memoized per order.
template <typename Build>
const std::vector<Graph>& memoized(std::map<std::size_t, std::vector<Graph>>& cache, std::mutex& m,
                                   std::size_t n, Build build) {
  {
    std::lock_guard lock(m);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto graphs = build();
  std::lock_guard lock(m);
  return cache.emplace(n, std::move(graphs)).first->second;
}

std::map<std::size_t, std::vector<Graph>> tree_cache, unicyclic_cache, connected_cache;
std::mutex tree_mutex, unicyclic_mutex, connected_mutex;

const std::vector<Graph>& trees_of_order(std::size_t n) {
  return memoized(tree_cache, tree_mutex, n, [n] {
    if (n == 1) return std::vector<Graph>{path(1)};
    // Every tree on n >= 2 vertices is a smaller tree plus a leaf.
    ClassSet set;
    for (const auto& t : trees_of_order(n - 1)) {
      for (Vertex v = 0; v < t.order(); ++v) {
        Vertex attach[] = {v};
        insert_class(set, with_vertex(t, attach));
      }
    }
    return values(set);
  });
}

const std::vector<Graph>& unicyclic_of_order(std::size_t n) {
  return memoized(unicyclic_cache, unicyclic_mutex, n, [n] {
    // A unicyclic graph is either a cycle or has a leaf whose removal
    // leaves a unicyclic graph of order n-1.
    ClassSet set;
    insert_class(set, cycle(n));
    if (n > 3) {
      for (const auto& u : unicyclic_of_order(n - 1)) {
        for (Vertex v = 0; v < u.order(); ++v) {
          Vertex attach[] = {v};
          insert_class(set, with_vertex(u, attach));
        }
      }
    }
    return values(set);
  });
}

const std::vector<Graph>& connected_of_order(std::size_t n) {
  return memoized(connected_cache, connected_mutex, n, [n] {
    if (n == 1) return std::vector<Graph>{path(1)};
    // Every connected graph has a non-cut vertex; removing it leaves a
    // connected graph of order n-1.
    ClassSet set;
    std::vector<Vertex> attach;
    for (const auto& g : connected_of_order(n - 1)) {
      const std::size_t m = g.order();
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        attach.clear();
        for (Vertex v = 0; v < m; ++v)
          if (mask >> v & 1U) attach.push_back(v);
        insert_class(set, with_vertex(g, attach));
      }
    }
    return values(set);
  });
}

}  // namespace

std::vector<Graph> all_trees(std::size_t n) {
  if (n < 1 || n > kTreeOrderCap)
    throw std::invalid_argument("all_trees: order must be in [1, " + std::to_string(kTreeOrderCap) + "]");
  return trees_of_order(n);
}

std::vector<Graph> all_unicyclic(std::size_t n, std::optional<std::size_t> g) {
  if (n < 3 || n > kUnicyclicOrderCap)
    throw std::invalid_argument("all_unicyclic: order must be in [3, " + std::to_string(kUnicyclicOrderCap) + "]");
  if (g && (*g < 3 || *g > n)) throw std::invalid_argument("all_unicyclic: girth must be in [3, n]");
  const auto& all = unicyclic_of_order(n);
  if (!g) return all;
  std::vector<Graph> out;
  for (const auto& u : all)
    if (girth(u) == *g) out.push_back(u);
  return out;
}

std::vector<Graph> all_trees_with_diameter(std::size_t n, std::size_t d) {
  if (d < 2 || d + 1 > n) throw std::invalid_argument("all_trees_with_diameter: need 2 <= d <= n-1");
  std::vector<Graph> out;
  for (const auto& t : all_trees(n))
    if (diameter(t) == d) out.push_back(t);
  return out;
}

std::vector<Graph> all_connected(std::size_t n) {
  if (n < 1 || n > kConnectedOrderCap)
    throw std::invalid_argument("all_connected: order must be in [1, " + std::to_string(kConnectedOrderCap) + "]");
  return connected_of_order(n);
}

void write_graph6_lines(std::ostream& os, std::span<const Graph> graphs) {
  for (const auto& g : graphs) os << to_graph6(g) << '\n';
}

}  // namespace graphsq
