#include "doctest.h"
#include "homcon/orbit_complex.hpp"
#include "homcon/rect.hpp"
#include "oracles.hpp"

using namespace homcon;

namespace {

RectPartition rp(std::vector<int> parts, int k, int l) { return RectPartition{std::move(parts), k, l}; }

}  // namespace

TEST_CASE("boundary coefficients follow the wreath formula") {
  // (l - lambda_i + 1)(mult(lambda_i - 1) + 1) mod 2, evaluated by hand
  CHECK(rect_boundary_coefficient(rp({2, 1}, 2, 2), 0) == 0);  // (1)(2)
  CHECK(rect_boundary_coefficient(rp({2, 1}, 2, 2), 1) == 0);  // (2)(1)
  CHECK(rect_boundary_coefficient(rp({1, 0}, 2, 2), 0) == 0);  // (2)(2)
  CHECK(rect_boundary_coefficient(rp({1, 1}, 2, 2), 1) == 0);  // (2)(1)
  CHECK(rect_boundary_coefficient(rp({2, 2}, 2, 2), 1) == 1);  // (1)(1)
  CHECK_THROWS_AS(rect_boundary_coefficient(rp({2, 2}, 2, 2), 0), std::invalid_argument);
  CHECK_THROWS_AS(rect_boundary_coefficient(rp({0, 0}, 2, 2), 0), std::invalid_argument);
}

TEST_CASE("matching on the 2x2 rectangle") {
  auto m21 = rect_matching(rp({2, 1}, 2, 2));
  REQUIRE(m21.has_value());
  CHECK(m21->parts == std::vector<int>{2, 2});
  auto m22 = rect_matching(rp({2, 2}, 2, 2));
  REQUIRE(m22.has_value());
  CHECK(m22->parts == std::vector<int>{2, 1});
  CHECK_FALSE(rect_matching(rp({1, 1}, 2, 2)).has_value());
}

TEST_CASE("matching is an involution moving one part by one") {
  for (int k = 1; k <= 5; ++k)
    for (int l = 1; l <= 5; ++l)
      for (const RectPartition& p : enumerate_rect_partitions(k, l)) {
        auto m = rect_matching(p);
        if (!m) continue;
        CHECK(m->valid());
        int diff = 0;
        for (int i = 0; i < k; ++i) diff += std::abs(m->parts[i] - p.parts[i]);
        CHECK(diff == 1);
        auto back = rect_matching(*m);
        REQUIRE(back.has_value());
        CHECK(back->parts == p.parts);
      }
}

TEST_CASE("critical cells by the structural description") {
  auto crit22 = rect_critical_cells(2, 2);
  REQUIRE(crit22.size() == 2);
  CHECK(crit22[0].parts == std::vector<int>{0, 0});
  CHECK(crit22[1].parts == std::vector<int>{1, 1});
  CHECK(rect_critical_cells(3, 3).empty());
  auto crit21 = rect_critical_cells(2, 1);
  REQUIRE(crit21.size() == 1);
  CHECK(crit21[0].parts == std::vector<int>{0, 0});

  for (int k = 1; k <= 6; ++k)
    for (int l = 1; l <= 6; ++l) {
      auto crit = rect_critical_cells(k, l);
      // same set as the unmatched partitions
      std::size_t unmatched = 0;
      for (const RectPartition& p : enumerate_rect_partitions(k, l))
        if (!rect_matching(p)) {
          ++unmatched;
          CHECK(std::find(crit.begin(), crit.end(), p) != crit.end());
        }
      CHECK(unmatched == crit.size());
      CHECK(q_binomial(k, l).at_minus_one() == static_cast<long long>(crit.size()));
      CHECK(oracles::naive_self_complementary_partitions(k, l) ==
            static_cast<long long>(crit.size()));
    }
}

TEST_CASE("lattice-path words") {
  CHECK(ne_word(rp({0, 0}, 2, 2)) == "NNEE");
  CHECK(ne_word(rp({1, 1}, 2, 2)) == "ENNE");
  CHECK(ne_word(rp({2, 0}, 2, 2)) == "NEEN");
  for (int k = 1; k <= 4; ++k)
    for (int l = 1; l <= 4; ++l)
      for (const RectPartition& p : enumerate_rect_partitions(k, l))
        CHECK(partition_from_word(ne_word(p), k, l) == p);
  CHECK_THROWS_AS(partition_from_word("NEE", 2, 2), std::invalid_argument);
}

TEST_CASE("phi on the 2x2 rectangle") {
  CHECK(phi(rp({0, 0}, 2, 2)).parts == std::vector<int>{2, 0});
  CHECK(phi(rp({1, 1}, 2, 2)).parts == std::vector<int>{1, 1});
  CHECK_THROWS_AS(phi(rp({2, 0}, 2, 2)), std::invalid_argument);  // not critical
  CHECK_THROWS_AS(phi(rp({0, 0, 0}, 3, 3)), std::invalid_argument);  // both odd
}

TEST_CASE("phi is a bijection onto self-complementary partitions") {
  for (int k = 1; k <= 6; ++k)
    for (int l = 1; l <= 6; ++l) {
      if ((k % 2) && (l % 2)) continue;
      std::vector<RectPartition> images;
      for (const RectPartition& p : rect_critical_cells(k, l)) {
        RectPartition img = phi(p);
        CHECK(img.self_complementary());
        images.push_back(img);
      }
      std::sort(images.begin(), images.end());
      CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
      std::vector<RectPartition> self_compl;
      for (const RectPartition& p : enumerate_rect_partitions(k, l))
        if (p.self_complementary()) self_compl.push_back(p);
      CHECK(images == self_compl);
    }
}

TEST_CASE("rect complex dims, boundary and homology") {
  RectComplex rc = build_rect_complex(2, 2);
  CHECK(rc.complex.dims() == std::vector<std::size_t>{1, 1, 2, 1, 1});
  CHECK(rc.complex.is_chain_complex());
  CHECK(homology_ranks(rc.complex) == std::vector<std::size_t>{1, 0, 1, 0, 0});

  RectComplex r11 = build_rect_complex(1, 1);
  CHECK(r11.complex.dims() == std::vector<std::size_t>{1, 1});
  CHECK(r11.complex.boundary[1].get(0, 0));
  CHECK(homology_ranks(r11.complex) == std::vector<std::size_t>{0, 0});
}

TEST_CASE("certification concludes and matches the rank oracle") {
  for (int k = 2; k <= 5; ++k)
    for (int l = 2; l <= 5; ++l) {
      RectComplex rc = build_rect_complex(k, l);
      SupportedComplex sc = rect_supported_complex(rc);
      MorseReport rep = certify(sc, rect_morse_matching(rc));
      CAPTURE(k);
      CAPTURE(l);
      CHECK(rep.acyclic);
      CHECK(rep.unit_coefficients);
      CHECK(rep.parity_condition);
      CHECK(rep.vanishing_condition);  // boundary vanishes at critical cells
      for (std::size_t i = 0; i < rep.critical_index.size(); ++i)
        if (!rep.critical_index[i].empty()) CHECK(i % 2 == 0);
      REQUIRE(rep.concluded_homology.has_value());
      CHECK(*rep.concluded_homology == homology_ranks(rc.complex));
    }
}

TEST_CASE("critical count bounds homology rank by rank") {
  RectComplex rc = build_rect_complex(4, 3);
  SupportedComplex sc = rect_supported_complex(rc);
  MorseReport rep = certify(sc, rect_morse_matching(rc));
  auto h = homology_ranks(rc.complex);
  for (std::size_t i = 0; i < h.size(); ++i) CHECK(rep.critical_index[i].size() >= h[i]);
}

TEST_CASE("boundary is bit-identical to the wreath invariants-D complex") {
  for (auto [k, l] : {std::pair{2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 3}}) {
    RectComplex rc = build_rect_complex(k, l);
    auto matched = rect_orbit_crosscheck(rc);
    CAPTURE(k);
    CAPTURE(l);
    CHECK(matched[static_cast<int>(ComplexKind::InvariantsD)]);
  }
  // the coinvariant complex has different matrices already at 1 x 2
  RectComplex rc12 = build_rect_complex(1, 2);
  auto matched = rect_orbit_crosscheck(rc12);
  CHECK(matched[static_cast<int>(ComplexKind::InvariantsD)]);
  CHECK_FALSE(matched[static_cast<int>(ComplexKind::CoinvariantsD)]);
}
