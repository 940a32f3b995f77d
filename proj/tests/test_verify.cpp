#include <doctest.h>

#include "graphsq/families.hpp"
#include "graphsq/iso.hpp"
#include "graphsq/verify.hpp"

using namespace graphsq;

namespace {

VerifyOptions quick(unsigned jobs = 1) {
  VerifyOptions o;
  o.jobs = jobs;
  o.trials = 60;
  return o;
}

const Json* row_where(const ClaimReport& r, const std::string& key, const Json& value) {
  for (const auto& row : r.extremal_table)
    if (row.contains(key) && row[key] == value) return &row;
  return nullptr;
}

}  // namespace

TEST_CASE("upper bound claims") {
  auto c = check_upper_bound_connected({4, 7}, quick());
  CHECK(c.status == Status::holds);
  CHECK(c.extremal_table.size() == 4);
  CHECK(c.extremal_table[0]["graphs"] == 6);
  auto u = check_upper_bound_unicyclic({3, 8}, quick());
  CHECK(u.status == Status::holds);
  CHECK_THROWS_AS(check_upper_bound_connected({4, 10}, quick()), std::invalid_argument);
  CHECK_THROWS_AS(check_upper_bound_unicyclic({2, 5}, quick()), std::invalid_argument);
}

TEST_CASE("tree extremes") {
  auto r = check_tree_extremes({4, 9}, quick());
  CHECK(r.status == Status::holds);
  CHECK(r.extremal_table.size() == 12);
  for (const auto& row : r.extremal_table) {
    CHECK(row["matches"] == true);
    CHECK(row["certified"] == true);
    const std::size_t n = row["n"];
    const auto want = row["role"] == "min" ? canonical_form(path(n)).bytes : canonical_form(star(n)).bytes;
    CHECK(row["graph6"] == want);
  }
  CHECK_THROWS_AS(check_tree_extremes({3, 6}, quick()), std::invalid_argument);
}

TEST_CASE("connected minimum and the order-3 exception") {
  auto r = check_connected_min({4, 7}, quick());
  CHECK(r.status == Status::holds);
  CHECK(r.details["order_3_exception"]["P3_square_radius"] == 2);
  CHECK(r.details["order_3_exception"]["C3_square_radius"] == 2);
  CHECK(r.details["order_3_exception"]["equal_integers"] == true);
}

TEST_CASE("unicyclic minimum") {
  auto r = check_unicyclic_min({4, 9}, quick());
  CHECK(r.status == Status::holds);
  const auto* n4 = row_where(r, "n", 4);
  REQUIRE(n4 != nullptr);
  // C_4 and star_plus(4) both square to K_4.
  CHECK((*n4)["attained"].size() == 2);
  for (std::size_t n = 5; n <= 9; ++n) CHECK((*row_where(r, "n", n))["graph6"] == canonical_form(tadpole(n)).bytes);
}

TEST_CASE("girth lemma and girth maximizer") {
  auto r = check_girth_lemma({6, 9}, quick());
  CHECK(r.status == Status::holds);
  for (const auto& row : r.extremal_table) CHECK(row["cycle_radius_is_4"] == true);
  // C_5 plus a pendant edge: U^2 has 13 edges on 6 vertices.
  CHECK(r.extremal_table[0]["min_average_degree_exact"] == "13/3");
  auto m = check_girth_max({6, 8}, std::nullopt, quick());
  CHECK(m.status == Status::holds);
  CHECK(m.extremal_table.size() == 4 + 5 + 6);
  auto one = check_girth_max({7, 7}, IntRange{3, 3}, quick());
  CHECK(one.extremal_table.size() == 1);
  CHECK(one.extremal_table[0]["graph6"] == canonical_form(cycle_star(7, 3)).bytes);
}

TEST_CASE("diameter candidates report both readings") {
  auto r = check_diameter_candidates({7, 9}, std::nullopt, quick());
  CHECK(r.details["verdict_reading"] == "maximizing");
  CHECK(r.details["readings"]["maximizing"]["holds"] == true);
  CHECK(r.details["readings"]["minimizing"]["holds"] == false);
  CHECK(r.status == Status::holds);
  const auto* p = row_where(r, "d", 2);
  REQUIRE(p != nullptr);
  CHECK((*p)["max_is_broom"] == true);
}

TEST_CASE("lemma suites") {
  auto r = check_lemma_properties(quick());
  CHECK(r.status == Status::holds);
  for (const auto& row : r.extremal_table) {
    if (row["decides_status"] == false) continue;
    CHECK(row["violations"] == 0);
    CHECK(row["undecided"] == 0);
  }
  const auto* sp = row_where(r, "suite", "spider_vs_path");
  REQUIRE(sp != nullptr);
  CHECK((*sp)["equality_cases"].get<std::size_t>() > 0);
  CHECK((*sp)["max_equality_error"].get<double>() <= 1e-10);
}

TEST_CASE("oracle agreement and classical bounds") {
  auto r = check_oracle_agreement({1, 8}, {3, 7}, quick());
  CHECK(r.status == Status::holds);
  CHECK(check_classical_bounds({4, 6}, quick()).status == Status::holds);
  CHECK_THROWS_AS(check_oracle_agreement({1, 13}, {3, 7}, quick()), std::invalid_argument);
}

TEST_CASE("scans") {
  auto s1 = scan_conjecture1(30, quick());
  CHECK(s1.status == Status::holds);
  CHECK(s1.extremal_table.size() == 26);
  CHECK(s1.extremal_table.front()["gap"].get<double>() > 0.6);
  auto s2 = scan_conjecture2(10, quick());
  for (const auto& row : s2.extremal_table) {
    const std::size_t d = row["d"];
    CHECK(row["conjectured_i"] == d / 2 + 1);
    if (d % 2 == 1) CHECK(row["argmax_i"].size() >= 2);
  }
  CHECK_THROWS_AS(scan_conjecture1(4, quick()), std::invalid_argument);
  CHECK_THROWS_AS(scan_conjecture2(17, quick()), std::invalid_argument);
}

TEST_CASE("reports are independent of the worker count") {
  for (const auto& claim : {"check_tree_extremes", "check_lemma_properties", "scan_conjecture2"}) {
    ClaimRequest a;
    a.claim = claim;
    a.n_max = 9;
    a.options = quick(1);
    auto b = a;
    b.options.jobs = 4;
    CHECK(run_claim(a).to_json() == run_claim(b).to_json());
  }
}

TEST_CASE("JSON round trip and CSV") {
  auto r = check_unicyclic_min({4, 6}, quick());
  CHECK(r.runtime_ms == std::nullopt);
  auto back = ClaimReport::from_json(r.to_json());
  CHECK(back.to_json() == r.to_json());
  auto csv = r.to_csv();
  CHECK(csv.substr(0, csv.find('\n')).find("graph6") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  auto timed = quick();
  timed.timing = true;
  CHECK(check_unicyclic_min({4, 5}, timed).runtime_ms.has_value());
}

TEST_CASE("status helpers") {
  CHECK(combine(Status::holds, Status::undecided) == Status::undecided);
  CHECK(combine(Status::violated, Status::undecided) == Status::violated);
  CHECK(parse_status("HOLDS") == Status::holds);
  CHECK(std::string(to_string(Status::violated)) == "VIOLATED");
  CHECK_THROWS(parse_status("maybe"));
  CHECK(claim_ids().size() == 13);
  ClaimRequest bad;
  bad.claim = "no_such_claim";
  CHECK_THROWS_AS(run_claim(bad), std::invalid_argument);
}
