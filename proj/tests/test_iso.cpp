#include <doctest.h>

#include <map>
#include <random>

#include "graphsq/certify.hpp"
#include "graphsq/enumerate.hpp"
#include "graphsq/families.hpp"
#include "graphsq/iso.hpp"
#include "oracles.hpp"

using namespace graphsq;

namespace {

std::vector<Vertex> shuffled(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  for (Vertex i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng() % i]);
  return p;
}

Graph random_tree(std::size_t n, std::mt19937_64& rng) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(static_cast<Vertex>(rng() % v), v);
  return Graph::from_edges(n, e);
}

}  // namespace

TEST_CASE("canonical form basics") {
  auto p = path(4);
  const Vertex rev[] = {3, 2, 1, 0};
  CHECK(canonical_form(p) == canonical_form(p.relabeled(rev)));
  CHECK(canonical_form(cycle(4)) != canonical_form(path(4)));
  CHECK(is_isomorphic(spider(2, 2, 0), path(5)));
  CHECK_FALSE(is_isomorphic(star(5), path(5)));
  CHECK_FALSE(is_isomorphic(path(4), path(5)));
  auto lab = canonical_labeling(tadpole(7));
  CHECK(tadpole(7).relabeled(lab) == canonical_graph(tadpole(7)));
  CHECK(to_graph6(canonical_graph(cycle(6))) == canonical_form(cycle(6)).bytes);
}

TEST_CASE("random relabelings of a random tree give identical bytes") {
  std::mt19937_64 rng(7);
  auto t = random_tree(10, rng);
  auto ref = canonical_form(t);
  for (int k = 0; k < 100; ++k) CHECK(canonical_form(t.relabeled(shuffled(10, rng))) == ref);
}

TEST_CASE("relabeling invariance on regular and symmetric graphs") {
  std::mt19937_64 rng(11);
  auto pet = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                    {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  std::vector<Graph> hard{pet, power(cycle(12), 2), cycle(16), complete(8), power(cycle(10), 3),
                          Graph::from_edges(12, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {6, 7}, {7, 8},
                                                 {8, 9}, {9, 6}, {10, 11}})};
  for (const auto& g : hard) {
    auto ref = canonical_form(g);
    for (int k = 0; k < 30; ++k) CHECK(canonical_form(g.relabeled(shuffled(g.order(), rng))) == ref);
  }
  // Two 3-regular graphs on 6 vertices: the prism and K_{3,3}.
  auto prism = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  auto k33 = Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  CHECK_FALSE(is_isomorphic(prism, k33));
}

TEST_CASE("canonical classes match the all-permutation oracle on every graph of order 5") {
  // Every labeled graph on 5 vertices: the two partitions into classes agree.
  std::vector<Edge> all;
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = u + 1; v < 5; ++v) all.emplace_back(u, v);
  std::map<std::string, std::string> fast_to_brute, brute_to_fast;
  bool consistent = true;
  for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
    std::vector<Edge> e;
    for (std::size_t k = 0; k < all.size(); ++k)
      if (mask >> k & 1) e.push_back(all[k]);
    auto g = Graph::from_edges(5, e);
    auto f = canonical_form(g).bytes;
    auto b = oracle::brute_canonical(g);
    auto [i1, new1] = fast_to_brute.emplace(f, b);
    auto [i2, new2] = brute_to_fast.emplace(b, f);
    consistent = consistent && i1->second == b && i2->second == f;
  }
  CHECK(consistent);
  CHECK(fast_to_brute.size() == 34);
}

TEST_CASE("subgraph containment") {
  CHECK(contains_subgraph(complete(4), cycle(3)));
  CHECK_FALSE(contains_subgraph(path(5), star(4)));
  CHECK_FALSE(contains_subgraph(tadpole(6), star(5)));
  CHECK(contains_subgraph(cycle_star(6, 3), star(5)));
  CHECK_FALSE(contains_subgraph(path(3), path(4)));
  std::mt19937_64 rng(5);
  std::vector<Graph> small;
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& g : all_connected(n)) small.push_back(g);
  std::size_t checked = 0;
  for (int k = 0; k < 400; ++k) {
    const auto& g = small[rng() % small.size()];
    const auto& h = small[rng() % small.size()];
    auto big = g.order() >= h.order() ? g : h;
    auto sm = g.order() >= h.order() ? h : g;
    CHECK(contains_subgraph(big, sm) == oracle::brute_contains(big, sm));
    ++checked;
  }
  for (const auto& u : all_unicyclic(6))
    for (std::size_t n = 3; n <= 6; ++n) CHECK(contains_subgraph(u, star(n)) == oracle::brute_contains(u, star(n)));
  CHECK(checked == 400);
}

TEST_CASE("minimal forbidden trees") {
  auto strict = minimal_forbidden(GraphClass::tree, 4, 10);
  auto proper = minimal_forbidden(GraphClass::tree, 4, 10, ForbiddenMode::proper);
  const auto s5 = canonical_form(star(5)).bytes;
  auto has = [](const ForbiddenSet& f, const std::string& key) {
    for (const auto& g : f.graphs)
      if (to_graph6(g) == key) return true;
    return false;
  };
  CHECK_FALSE(has(strict, s5));
  CHECK(has(proper, s5));
  CHECK(strict.undecided.empty());
  CHECK(strict.graphs.size() == 9);
  CHECK(proper.graphs.size() == 8);
  for (const auto& t : strict.graphs) {
    CHECK(compare_to(evaluate(power(t, 2)), 4) == Verdict::greater);
    // Deleting any leaf gives a tree at or below the threshold.
    for (Vertex v = 0; v < t.order(); ++v) {
      if (t.degree(v) != 1) continue;
      std::vector<Edge> rest;
      for (auto [a, b] : t.edges())
        if (a != v && b != v) rest.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
      auto smaller = Graph::from_edges(t.order() - 1, rest);
      CHECK(compare_to(evaluate(power(smaller, 2)), 4) != Verdict::greater);
    }
  }
  // Pairwise non-containment.
  for (std::size_t i = 0; i < strict.graphs.size(); ++i)
    for (std::size_t j = 0; j < strict.graphs.size(); ++j)
      if (i != j) CHECK_FALSE(contains_subgraph(strict.graphs[i], strict.graphs[j]));
}

TEST_CASE("minimal forbidden unicyclic graphs") {
  auto f = minimal_forbidden(GraphClass::unicyclic, 4, 8);
  REQUIRE_FALSE(f.graphs.empty());
  std::map<unsigned, std::size_t> by_girth;
  for (const auto& u : f.graphs) {
    CHECK(compare_to(evaluate(power(u, 2)), 4) == Verdict::greater);
    ++by_girth[girth(u).value()];
  }
  // C_g with one pendant edge exceeds 4 for every 5 <= g <= 7 and contains
  // no smaller unicyclic graph above 4, so large girths do occur.
  for (std::size_t g = 5; g <= 7; ++g) {
    const auto key = canonical_form(cycle_star(g + 1, g)).bytes;
    bool found = false;
    for (const auto& u : f.graphs) found = found || to_graph6(u) == key;
    CHECK(found);
  }
  CHECK(by_girth[5] == 1);
  CHECK(by_girth[6] == 1);
  CHECK(by_girth[7] == 1);
  CHECK(f.graphs.size() == 21);
  CHECK_THROWS_AS(minimal_forbidden(GraphClass::unicyclic, 4, 13), std::invalid_argument);
}
