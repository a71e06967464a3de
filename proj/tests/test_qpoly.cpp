#include "doctest.h"
#include "homcon/permgroup.hpp"
#include "homcon/qpoly.hpp"
#include "oracles.hpp"

using homcon::BigInt;
using homcon::QPolynomial;

namespace {

QPolynomial poly(std::vector<long long> c) {
  std::vector<BigInt> b(c.begin(), c.end());
  return QPolynomial(std::move(b));
}

}  // namespace

TEST_CASE("q_binomial fixed values") {
  CHECK(homcon::q_binomial(0, 5) == QPolynomial::one());
  CHECK(homcon::q_binomial(5, 0) == QPolynomial::one());
  // the 6 partitions in a 2x2 rectangle by size: 1,1,2,1,1
  CHECK(homcon::q_binomial(2, 2) == poly({1, 1, 2, 1, 1}));
  CHECK(homcon::q_binomial(2, 2).at_minus_one() == 2);
  CHECK(homcon::q_binomial(2, 2).to_string() == "1 + q + 2q^2 + q^3 + q^4");
}

TEST_CASE("q_binomial counts partitions by size and is palindromic") {
  for (int k = 0; k <= 5; ++k)
    for (int l = 0; l <= 5; ++l) {
      QPolynomial p = homcon::q_binomial(k, l);
      CHECK(p == homcon::q_binomial(l, k));
      CHECK((p.degree() == k * l || (k * l == 0 && p.degree() == 0)));
      std::vector<long long> by_size(k * l + 1, 0);
      for (const auto& parts : oracles::naive_rect_partitions(k, l)) {
        int sum = 0;
        for (int v : parts) sum += v;
        by_size[sum] += 1;
      }
      for (int i = 0; i <= k * l; ++i) CHECK(p.coeff(i) == by_size[i]);
      CHECK(p.at_minus_one() == oracles::naive_self_complementary_partitions(k, l));
      CHECK(homcon::is_symmetric_unimodal(p));
    }
}

TEST_CASE("macmahon fixed values") {
  CHECK(homcon::macmahon(1, 1, 1) == poly({1, 1}));
  CHECK(homcon::macmahon(2, 2, 2).at_one() == 20);
  CHECK(homcon::macmahon(2, 2, 2).at_minus_one() == 4);
  CHECK(homcon::macmahon(3, 3, 0) == QPolynomial::one());
}

TEST_CASE("macmahon counts plane partitions by volume") {
  for (int r = 1; r <= 3; ++r)
    for (int c = 1; c <= 3; ++c)
      for (int t = 0; t <= 3; ++t) {
        QPolynomial p = homcon::macmahon(r, c, t);
        std::vector<long long> by_volume(r * c * t + 1, 0);
        for (const auto& grid : oracles::naive_plane_partitions(r, c, t)) {
          int sum = 0;
          for (int v : grid) sum += v;
          by_volume[sum] += 1;
        }
        for (int i = 0; i <= r * c * t; ++i) CHECK(p.coeff(i) == by_volume[i]);
        CHECK(p.at_minus_one() == oracles::naive_self_complementary_plane_partitions(r, c, t));
      }
}

TEST_CASE("cyclic orbit polynomial") {
  CHECK(homcon::cyclic_orbit_polynomial(1) == poly({1, 1}));
  CHECK(homcon::cyclic_orbit_polynomial(2) == poly({1, 1, 1}));
  CHECK(homcon::cyclic_orbit_polynomial(4) == poly({1, 1, 2, 1, 1}));
  CHECK(homcon::cyclic_orbit_polynomial(4).at_minus_one() == 2);
}

TEST_CASE("cyclic orbit polynomial equals brute-force orbit counts") {
  for (int n = 1; n <= 16; ++n) {
    QPolynomial p = homcon::cyclic_orbit_polynomial(n);
    homcon::PermGroup g = homcon::parse_group("cyclic:" + std::to_string(n));
    auto counts = oracles::naive_orbit_counts(g);
    for (int i = 0; i <= n; ++i) CHECK(p.coeff(i) == counts[i]);
    CHECK(p.at_minus_one() == oracles::naive_self_complementary_orbits(g));
    if (n > 2) CHECK(homcon::cyclic_self_complementary_closed_form(n) == p.at_minus_one());
  }
}

TEST_CASE("symmetry and unimodality predicate") {
  CHECK(homcon::is_symmetric_unimodal(poly({1, 1, 2, 1, 1})));
  CHECK_FALSE(homcon::is_symmetric_unimodal(poly({1, 0, 0, 1})));
  CHECK(homcon::is_symmetric_unimodal(poly({1})));
  CHECK(homcon::is_symmetric_unimodal(QPolynomial()));
  CHECK_FALSE(homcon::is_symmetric_unimodal(poly({2, 1, 2})));
  CHECK_FALSE(homcon::is_symmetric_unimodal(poly({1, 2})));
}

TEST_CASE("exact division failure is loud") {
  QPolynomial p = poly({1, 1, 1});
  CHECK_THROWS_AS(p.divide_exact(poly({1, 1})), std::logic_error);
  CHECK(poly({1, 0, -1}).divide_exact(poly({1, 1})) == poly({1, -1}));
  CHECK_THROWS_AS(p.divide_exact(QPolynomial()), std::logic_error);
}

TEST_CASE("arithmetic keeps canonical form") {
  QPolynomial p = poly({1, 2, 1});
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK((p * QPolynomial()).is_zero());
  CHECK(QPolynomial().to_string() == "0");
  CHECK(poly({0, -1}).to_string() == "-q");
}
