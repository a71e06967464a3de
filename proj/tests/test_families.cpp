#include "doctest.h"
#include "homcon/families.hpp"
#include "homcon/orbit_complex.hpp"

using namespace homcon;

TEST_CASE("necklace homology rows") {
  NecklaceReport r4 = necklace_report(4, false);
  CHECK(r4.homology == std::vector<std::size_t>{1, 0, 1, 0, 0});
  CHECK_FALSE(r4.conjecture_checked);

  NecklaceReport r8 = necklace_report(8, false);
  CHECK(r8.homology == std::vector<std::size_t>{1, 0, 1, 0, 1, 0, 1, 0, 0});

  for (int n = 1; n <= 9; n += 2) {
    NecklaceReport odd = necklace_report(n, true);
    for (std::size_t h : odd.homology) CHECK(h == 0);
    CHECK_FALSE(odd.conjecture_checked);  // recursion is stated for even n
  }
}

TEST_CASE("orbit polynomial in the report matches the sweep") {
  for (int n = 1; n <= 12; ++n) {
    NecklaceReport rep = necklace_report(n, false);
    CHECK(rep.orbit_polynomial ==
          orbit_polynomial(parse_group("cyclic:" + std::to_string(n))));
  }
}

TEST_CASE("doubling recursion verified on small even n") {
  // worked instance: A_2 = 1, X_2 = 1+q+q^2, (q + 1+q+q^2)/(1+q) = 1+q,
  // matching A_4 = 1 + q^2 after halving exponents
  NecklaceReport r4 = necklace_report(4, true);
  REQUIRE(r4.conjecture_checked);
  REQUIRE(r4.conjecture_holds.has_value());
  CHECK(*r4.conjecture_holds);

  for (int n = 2; n <= 14; n += 2) {
    NecklaceReport rep = necklace_report(n, true);
    CAPTURE(n);
    REQUIRE(rep.conjecture_checked);
    CHECK(*rep.conjecture_holds);
    CHECK(rep.conjecture_note.empty());
  }
}

TEST_CASE("isbell construction for b = 3, 5, 7") {
  IsbellGroup g3 = isbell_group(3);
  CHECK(g3.d == 2);
  CHECK(g3.group.n == 6);
  CHECK(group_order(g3.group) == 12);

  IsbellGroup g5 = isbell_group(5);
  CHECK(g5.d == 4);
  CHECK(g5.group.n == 10);
  CHECK(group_order(g5.group) == 80);

  IsbellGroup g7 = isbell_group(7);
  CHECK(g7.d == 3);
  CHECK(g7.group.n == 14);
  CHECK(group_order(g7.group) == 56);
  CHECK(g7.factor == 0b1011);  // x^3 + x + 1, the lexicographically least choice

  for (const IsbellGroup* ig : {&g3, &g5, &g7}) {
    CHECK(is_transitive(ig->group));
    CHECK_FALSE(has_two_power_derangement(ig->group));
  }

  CHECK_THROWS_AS(isbell_group(1), std::invalid_argument);
  CHECK_THROWS_AS(isbell_group(4), std::invalid_argument);
}

TEST_CASE("concentration failure for the constructed groups") {
  ConcentrationReport bad = concentration_failure_check(isbell_group(3).group);
  CHECK(bad.odd_rank_nonzero);

  ConcentrationReport c4 = concentration_failure_check(parse_group("cyclic:4"));
  CHECK_FALSE(c4.odd_rank_nonzero);
  CHECK(c4.homology == std::vector<std::size_t>{1, 0, 1, 0, 0});
}

TEST_CASE("transitive even-degree groups without 2-power derangements have odd homology") {
  // Euler characteristic zero plus H_0 = F_2 forces a nonzero odd rank
  for (int b : {3, 5}) {
    IsbellGroup ig = isbell_group(b);
    QPolynomial x = orbit_polynomial(ig.group);
    CHECK(x.at_minus_one() == 0);
    ConcentrationReport rep = concentration_failure_check(ig.group);
    CHECK(rep.homology[0] == 1);
    CHECK(rep.odd_rank_nonzero);
  }
}
