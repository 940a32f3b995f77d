#include <doctest.h>

#include "graphsq/certify.hpp"
#include "graphsq/families.hpp"
#include "graphsq/iso.hpp"

using namespace graphsq;

TEST_CASE("basic families") {
  CHECK(path(1).order() == 1);
  CHECK(path(1).size() == 0);
  CHECK(cycle(3) == complete(3));
  CHECK(degree_sequence(star(4)) == std::vector<std::size_t>{3, 1, 1, 1});
  CHECK(complete(5).size() == 10);
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(path(0), std::invalid_argument);
}

TEST_CASE("star_plus") {
  CHECK(star_plus(3) == cycle(3));
  CHECK(compare_to(evaluate(power(star_plus(5), 2)), 4) == Verdict::equal);
  for (std::size_t n = 4; n <= 9; ++n) {
    CHECK(girth(star_plus(n)) == 3u);
    CHECK(diameter(star_plus(n)) == 2u);
    CHECK(star_plus(n).size() == n);
  }
}

TEST_CASE("tadpole") {
  CHECK(tadpole(4).edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  CHECK(compare_to(evaluate(power(tadpole(5), 2)), 4) == Verdict::less);
  for (std::size_t n = 4; n <= 10; ++n) {
    CHECK(girth(tadpole(n)) == 3u);
    CHECK(tadpole(n).size() == n);
  }
  CHECK_THROWS_AS(tadpole(3), std::invalid_argument);
}

TEST_CASE("cycle_star") {
  CHECK(cycle_star(7, 7) == cycle(7));
  CHECK(degree_sequence(cycle_star(5, 3)) == std::vector<std::size_t>{4, 2, 2, 1, 1});
  CHECK(girth(cycle_star(5, 3)) == 3u);
  CHECK(is_isomorphic(cycle_star(4, 3), star_plus(4)));
  CHECK_THROWS_AS(cycle_star(5, 6), std::invalid_argument);
  CHECK_THROWS_AS(cycle_star(5, 2), std::invalid_argument);
}

TEST_CASE("broom") {
  for (std::size_t n = 5; n <= 10; ++n)
    for (std::size_t d = 2; d < n; ++d)
      for (std::size_t i = 2; i <= d; ++i) {
        auto b = broom(n, d, i);
        CHECK(b.order() == n);
        CHECK(diameter(b) == d);
      }
  auto b = broom(7, 4, 3);
  CHECK(diameter(b) == 4u);
  CHECK(b.degree(2) == 4);
  CHECK(b.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {2, 5}, {2, 6}, {3, 4}});
  for (std::size_t n = 3; n <= 8; ++n) CHECK(is_isomorphic(broom(n, 2, 2), star(n)));
  CHECK(broom(6, 5, 3) == path(6));
  CHECK(is_isomorphic(broom(9, 5, 2), broom(9, 5, 5)));
  CHECK_THROWS_AS(broom(6, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(broom(6, 4, 5), std::invalid_argument);
  CHECK_THROWS_AS(broom(4, 4, 2), std::invalid_argument);
}

TEST_CASE("spider") {
  for (std::size_t k = 2; k <= 6; ++k) CHECK(is_isomorphic(spider(k - 1, k - 1, 0), path(2 * k - 1)));
  CHECK(spider(1, 1, 1) == star(4));
  CHECK(spider(2, 2, 1).order() == 6);
  CHECK(compare(evaluate(power(spider(2, 2, 1), 2)), evaluate(power(path(6), 2))) == Verdict::greater);
  CHECK(spider(2, 1, 3).edges() == std::vector<Edge>{{0, 1}, {0, 3}, {0, 4}, {1, 2}, {4, 5}, {5, 6}});
}

TEST_CASE("family spec text") {
  auto s = FamilySpec::parse("broom:n=9,d=4,i=3");
  CHECK(s.family == "broom");
  CHECK(s.params.at("n") == 9);
  CHECK(s.build() == broom(9, 4, 3));
  CHECK(FamilySpec::parse(s.to_string()).build() == s.build());
  CHECK(FamilySpec::parse("cycle:n=6").build() == cycle(6));
  CHECK(FamilySpec::parse("spider:a=1,b=2,c=3").build() == spider(1, 2, 3));
  CHECK(FamilySpec::parse("cycle_star:n=8,g=5").build() == cycle_star(8, 5));
  CHECK_THROWS_AS(FamilySpec::parse("nope:n=3").build(), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::parse("path:n=x"), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::parse("path:m=3").build(), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::parse("broom:n=9,d=4").build(), std::invalid_argument);
}
