#include "battery.hpp"
#include "doctest.h"
#include "homcon/orbit_complex.hpp"
#include "oracles.hpp"

using namespace homcon;

namespace {

std::vector<std::size_t> ranks(const std::string& spec, ComplexKind kind) {
  return homology_ranks(build_orbit_complex(parse_group(spec), kind));
}

std::vector<std::size_t> rev(std::vector<std::size_t> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

// homology recomputed through the naive elimination oracle
std::vector<int> oracle_homology(const GradedComplex& c) {
  std::size_t top = c.labels.size();
  std::vector<int> bd(top + 1, 0);
  for (std::size_t i = 1; i < top; ++i) {
    std::vector<std::vector<int>> m(c.boundary[i].rows(),
                                    std::vector<int>(c.boundary[i].cols(), 0));
    for (std::size_t r = 0; r < c.boundary[i].rows(); ++r)
      for (std::size_t col = 0; col < c.boundary[i].cols(); ++col)
        m[r][col] = c.boundary[i].get(r, col);
    bd[i] = oracles::naive_rank(m);
  }
  std::vector<int> h(top);
  for (std::size_t i = 0; i < top; ++i)
    h[i] = static_cast<int>(c.labels[i].size()) - bd[i] - (i + 1 < top ? bd[i + 1] : 0);
  if (c.reversed_grading) std::reverse(h.begin(), h.end());
  return h;
}

}  // namespace

TEST_CASE("cyclic group complexes match the published rows") {
  GradedComplex c4 = build_orbit_complex(parse_group("cyclic:4"), ComplexKind::InvariantsD);
  CHECK(c4.dims() == std::vector<std::size_t>{1, 1, 2, 1, 1});
  CHECK(homology_ranks(c4) == std::vector<std::size_t>{1, 0, 1, 0, 0});
  CHECK(euler_characteristic(c4) == 2);

  CHECK(ranks("cyclic:6", ComplexKind::InvariantsD) ==
        std::vector<std::size_t>{1, 0, 0, 0, 1, 0, 0});
  CHECK(ranks("cyclic:3", ComplexKind::InvariantsD) == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(euler_characteristic(build_orbit_complex(parse_group("cyclic:3"),
                                                 ComplexKind::InvariantsD)) == 0);
}

TEST_CASE("trivial group gives the acyclic full-simplex complex") {
  for (int n = 1; n <= 5; ++n) {
    GradedComplex c =
        build_orbit_complex(parse_group(battery::trivial_spec(n)), ComplexKind::InvariantsD);
    for (int i = 0; i <= n; ++i)
      CHECK(c.dims()[i] == static_cast<std::size_t>(oracles::binomial(n, i)));
    for (std::size_t h : homology_ranks(c)) CHECK(h == 0);
  }
}

TEST_CASE("symmetric group boundaries count extensions mod 2") {
  for (int n = 2; n <= 6; ++n) {
    GradedComplex c =
        build_orbit_complex(parse_group("symmetric:" + std::to_string(n)), ComplexKind::InvariantsD);
    for (int i = 0; i <= n; ++i) CHECK(c.dim(i) == 1);
    // the i-subsets containing a fixed (i-1)-subset number n-i+1
    for (int i = 1; i <= n; ++i) CHECK(c.boundary[i].get(0, 0) == ((n - i + 1) % 2 == 1));
  }
  CHECK(euler_characteristic(build_orbit_complex(parse_group("symmetric:4"),
                                                 ComplexKind::InvariantsD)) == 1);
  CHECK(ranks("symmetric:4", ComplexKind::InvariantsD) ==
        std::vector<std::size_t>{1, 0, 0, 0, 0});
}

TEST_CASE("d squared vanishes for all four kinds") {
  for (const std::string& spec : battery::specs(7)) {
    PermGroup g = parse_group(spec);
    for (ComplexKind kind : kAllKinds) {
      GradedComplex c = build_orbit_complex(g, kind);
      CAPTURE(spec);
      CAPTURE(to_string(kind));
      CHECK(c.is_chain_complex());
    }
  }
}

TEST_CASE("rank sequences satisfy the duality relations") {
  for (const std::string& spec : battery::specs(7)) {
    PermGroup g = parse_group(spec);
    auto inv_d = homology_ranks(build_orbit_complex(g, ComplexKind::InvariantsD));
    auto coinv_d = homology_ranks(build_orbit_complex(g, ComplexKind::CoinvariantsD));
    auto inv_u = homology_ranks(build_orbit_complex(g, ComplexKind::InvariantsU));
    auto coinv_u = homology_ranks(build_orbit_complex(g, ComplexKind::CoinvariantsU));
    CAPTURE(spec);
    CHECK(inv_u == rev(inv_d));
    CHECK(coinv_d == inv_u);
    CHECK(coinv_u == rev(coinv_d));
  }
}

TEST_CASE("euler characteristic equals the orbit polynomial at -1") {
  for (const std::string& spec : battery::specs(7)) {
    PermGroup g = parse_group(spec);
    BigInt expect = orbit_polynomial(g).at_minus_one();
    for (ComplexKind kind : kAllKinds) {
      CAPTURE(spec);
      CHECK(euler_characteristic(build_orbit_complex(g, kind)) == expect);
    }
  }
}

TEST_CASE("odd point orbits force acyclicity, even ones fix H0 and H1") {
  for (const std::string& spec : battery::specs(7)) {
    PermGroup g = parse_group(spec);
    auto h = homology_ranks(build_orbit_complex(g, ComplexKind::InvariantsD));
    CAPTURE(spec);
    if (has_odd_orbit(g)) {
      for (std::size_t x : h) CHECK(x == 0);
    } else {
      CHECK(h[0] == 1);
      CHECK(h[1] == 0);
    }
  }
}

TEST_CASE("homology agrees with the naive elimination oracle") {
  for (const char* spec : {"cyclic:6", "wreath:2,3", "symmetric:5"}) {
    PermGroup g = parse_group(spec);
    for (ComplexKind kind : kAllKinds) {
      GradedComplex c = build_orbit_complex(g, kind);
      auto fast = homology_ranks(c);
      auto slow = oracle_homology(c);
      REQUIRE(fast.size() == slow.size());
      for (std::size_t i = 0; i < fast.size(); ++i) CHECK(static_cast<int>(fast[i]) == slow[i]);
    }
  }
}

TEST_CASE("masked homotopy identity") {
  PermGroup c3 = parse_group("cyclic:3");
  CHECK(masked_homotopy_check(c3, 0b111));
  CHECK(masked_homotopy_check(c3, 0));
  PermGroup c4 = parse_group("cyclic:4");
  CHECK(masked_homotopy_check(c4, 0b1111));
  CHECK_THROWS_AS(masked_homotopy_check(c4, 0b0001), std::invalid_argument);

  // every G-stable union of point orbits, for a mixed-orbit group
  PermGroup g = parse_group("gens:6:(1 2 3),(4 5)");
  auto orbits = point_orbits(g);
  REQUIRE(orbits.size() == 3);
  for (unsigned pick = 0; pick < 8; ++pick) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < orbits.size(); ++i)
      if ((pick >> i) & 1)
        for (int p : orbits[i]) s |= std::uint64_t(1) << p;
    CHECK(masked_homotopy_check(g, s));
  }
}

TEST_CASE("complex kind names round-trip") {
  for (ComplexKind kind : kAllKinds) CHECK(complex_kind_from_string(to_string(kind)) == kind);
  CHECK_THROWS_AS(complex_kind_from_string("sideways"), ParseError);
}
