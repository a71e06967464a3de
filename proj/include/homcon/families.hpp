#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homcon/errors.hpp"
#include "homcon/permgroup.hpp"
#include "homcon/qpoly.hpp"

namespace homcon {

// Homology of the invariant down-complex of the cyclic group C_n (necklace
// orbits), with an optional check of the doubling recursion
//   A_{2m}(q^{1/2}) = (q A_m(q) + X_m(q)) / (1 + q)
// where A_m is the homology Poincare polynomial and X_m the orbit polynomial.
struct NecklaceReport {
  int n = 0;
  std::vector<std::size_t> homology;  // length n+1
  QPolynomial orbit_polynomial;       // X(C_n, q)
  bool conjecture_checked = false;
  std::optional<bool> conjecture_holds;
  std::string conjecture_note;  // empty when the check passes
};

// check_conjecture is honoured for even n; the check verifies that odd-index
// ranks vanish and that the recursion holds with exact polynomial division.
// A failed division or mismatch is reported as conjecture_holds = false (a
// mathematical finding), never as an exception.
NecklaceReport necklace_report(int n, bool check_conjecture, const Limits& limits = {});

// A transitive group of order b * 2^d on 2b points (b odd) none of whose
// 2-power-order elements is a derangement: the affine group of a hyperplane
// action. V = GF(2)^d carries a cyclic order-b matrix in rational canonical
// form (companion matrix of an irreducible degree-d factor of x^b - 1 of
// multiplicative order b); G = CV acts on the 2b cosets of the parity-check
// hyperplane H.
struct IsbellGroup {
  int b = 0;
  int d = 0;                    // minimal d with b | 2^d - 1
  std::uint64_t factor = 0;     // chosen irreducible factor, bit i = coeff of x^i
  PermGroup group;              // on 2b points
  std::vector<std::string> trace;  // construction record
};

IsbellGroup isbell_group(int b, const Limits& limits = {});

struct ConcentrationReport {
  std::vector<std::size_t> homology;  // invariants-D
  bool odd_rank_nonzero = false;
};

ConcentrationReport concentration_failure_check(const PermGroup& g, const Limits& limits = {});

}  // namespace homcon
