#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "graphsq/enumerate.hpp"
#include "graphsq/families.hpp"
#include "graphsq/iso.hpp"
#include "oracles.hpp"

using namespace graphsq;

namespace {

double factorial(std::size_t n) {
  double f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<double>(k);
  return f;
}

std::set<std::string> brute_codes(const std::vector<Graph>& graphs) {
  std::set<std::string> out;
  for (const auto& g : graphs) out.insert(oracle::brute_canonical(g));
  return out;
}

}  // namespace

TEST_CASE("tree counts against the Pruefer oracle") {
  CHECK(all_trees(4).size() == 2);
  for (std::size_t n = 1; n <= 9; ++n) {
    auto oracle_trees = oracle::pruefer_trees(n);
    std::set<std::string> codes;
    for (const auto& t : all_trees(n)) codes.insert(oracle::tree_code(n, t.edges()));
    CHECK(codes.size() == all_trees(n).size());
    CHECK(all_trees(n).size() == oracle_trees.size());
  }
}

TEST_CASE("tree enumeration sums to Cayley's formula") {
  // sum over classes of n!/|Aut(T)| counts labeled trees, n^(n-2).
  for (std::size_t n = 2; n <= 12; ++n) {
    double labeled = 0;
    for (const auto& t : all_trees(n)) labeled += factorial(n) / oracle::tree_automorphisms(n, t.edges());
    CHECK(labeled == doctest::Approx(std::pow(static_cast<double>(n), static_cast<double>(n - 2))).epsilon(1e-12));
  }
}

TEST_CASE("tree automorphism oracle agrees with brute force") {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& t : all_trees(n))
      CHECK(oracle::tree_automorphisms(n, t.edges()) == static_cast<double>(oracle::brute_automorphisms(t)));
}

TEST_CASE("frozen counts") {
  const std::size_t trees[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};
  for (std::size_t n = 1; n <= 14; ++n) CHECK(all_trees(n).size() == trees[n - 1]);
  const std::size_t unicyclic[] = {1, 2, 5, 13, 33, 89, 240, 657, 1806, 5026};
  for (std::size_t n = 3; n <= 12; ++n) CHECK(all_unicyclic(n).size() == unicyclic[n - 3]);
  const std::size_t connected[] = {1, 1, 2, 6, 21, 112, 853, 11117, 261080};
  for (std::size_t n = 1; n <= 8; ++n) CHECK(all_connected(n).size() == connected[n - 1]);
}

TEST_CASE("unicyclic classes match the tree-plus-edge oracle") {
  CHECK(all_unicyclic(4).size() == 2);
  CHECK(all_unicyclic(5).size() == 5);
  for (std::size_t n = 3; n <= 8; ++n) CHECK(brute_codes(all_unicyclic(n)) == oracle::unicyclic_codes(n));
}

TEST_CASE("connected classes match the edge-subset oracle") {
  CHECK(all_connected(3).size() == 2);
  for (std::size_t n = 1; n <= 5; ++n) CHECK(brute_codes(all_connected(n)) == oracle::connected_codes(n));
}

TEST_CASE("emitted graphs are canonical, distinct and of the right shape") {
  for (std::size_t n = 1; n <= 11; ++n) {
    std::set<std::string> seen;
    for (const auto& t : all_trees(n)) {
      CHECK(is_connected(t));
      CHECK(t.size() == n - 1);
      CHECK(to_graph6(t) == canonical_form(t).bytes);
      seen.insert(to_graph6(t));
    }
    CHECK(seen.size() == all_trees(n).size());
  }
  for (std::size_t n = 3; n <= 10; ++n)
    for (const auto& u : all_unicyclic(n)) {
      CHECK(is_connected(u));
      CHECK(u.size() == n);
    }
  for (const auto& g : all_connected(7)) CHECK(is_connected(g));
}

TEST_CASE("girth and diameter filters partition their classes") {
  for (std::size_t n = 3; n <= 12; ++n) {
    std::size_t total = 0;
    for (std::size_t g = 3; g <= n; ++g) {
      auto part = all_unicyclic(n, g);
      for (const auto& u : part) CHECK(girth(u) == g);
      total += part.size();
    }
    CHECK(total == all_unicyclic(n).size());
  }
  CHECK(all_unicyclic(6, 6).size() == 1);
  CHECK(all_unicyclic(6, 6)[0] == canonical_graph(cycle(6)));
  for (std::size_t n = 3; n <= 14; ++n) {
    std::size_t total = 0;
    for (std::size_t d = 2; d < n; ++d) {
      auto part = all_trees_with_diameter(n, d);
      for (const auto& t : part) CHECK(diameter(t) == d);
      total += part.size();
    }
    CHECK(total == all_trees(n).size());
    CHECK(all_trees_with_diameter(n, n - 1).size() == 1);
    CHECK(is_isomorphic(all_trees_with_diameter(n, n - 1)[0], path(n)));
    CHECK(all_trees_with_diameter(n, 2).size() == 1);
    CHECK(is_isomorphic(all_trees_with_diameter(n, 2)[0], star(n)));
  }
  CHECK(all_trees_with_diameter(6, 3).size() == 2);
}

TEST_CASE("caps and bad arguments") {
  CHECK_THROWS_AS(all_trees(0), std::invalid_argument);
  CHECK_THROWS_AS(all_trees(15), std::invalid_argument);
  CHECK_THROWS_AS(all_unicyclic(2), std::invalid_argument);
  CHECK_THROWS_AS(all_unicyclic(13), std::invalid_argument);
  CHECK_THROWS_AS(all_unicyclic(6, 2), std::invalid_argument);
  CHECK_THROWS_AS(all_connected(10), std::invalid_argument);
  CHECK_THROWS_AS(all_trees_with_diameter(6, 1), std::invalid_argument);
  CHECK_THROWS_AS(all_trees_with_diameter(6, 6), std::invalid_argument);
}

TEST_CASE("graph6 lines") {
  std::ostringstream os;
  auto trees = all_trees(5);
  write_graph6_lines(os, trees);
  std::istringstream is(os.str());
  std::string line;
  std::size_t k = 0;
  while (std::getline(is, line)) CHECK(from_graph6(line) == trees[k++]);
  CHECK(k == trees.size());
}
