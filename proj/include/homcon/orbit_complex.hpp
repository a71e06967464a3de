#pragma once

#include <cstdint>
#include <string>

#include "homcon/complex.hpp"
#include "homcon/permgroup.hpp"

namespace homcon {

// The four chain complexes attached to a group action on subsets: the
// G-invariant and G-coinvariant spaces, each with the down map D or the up
// map U as differential. U-complexes are stored with the grading reversed so
// a single homological routine serves all four; homology_ranks() reports in
// the subset-size grading for every kind.
enum class ComplexKind { InvariantsD, CoinvariantsD, InvariantsU, CoinvariantsU };

constexpr ComplexKind kAllKinds[] = {ComplexKind::InvariantsD, ComplexKind::CoinvariantsD,
                                     ComplexKind::InvariantsU, ComplexKind::CoinvariantsU};

std::string to_string(ComplexKind kind);                 // "inv-d", "coinv-d", "inv-u", "coinv-u"
ComplexKind complex_kind_from_string(const std::string&);  // throws ParseError

// One chain space per G-orbit of i-subsets; cells are labelled by the
// canonical (least) orbit bitmask rendered as a 1-indexed set.
//
// Boundary coefficients mod 2:
//   invariants-D   (S-orbit, T-orbit) = #{T' in T-orbit : T' contains S},  S fixed
//   coinvariants-D (S-orbit, T-orbit) = #{S' in S-orbit : S' inside T},    T fixed
// The U kinds are the corresponding cochain complexes, stored reversed.
GradedComplex build_orbit_complex(const PermGroup& g, ComplexKind kind,
                                  const Limits& limits = {});

// Verifies D * U^(S) + U^(S) * D = |S| * I over GF(2) on the full
// 2^n-dimensional complex, where U^(S) only adds points of S. S must be
// G-stable (a union of point orbits); throws std::invalid_argument if not.
bool masked_homotopy_check(const PermGroup& g, std::uint64_t s_mask,
                           const Limits& limits = {});

}  // namespace homcon
