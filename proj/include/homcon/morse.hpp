#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "homcon/complex.hpp"

namespace homcon {

// A chain complex whose cells are the elements of a graded poset, together
// with the comparability oracle: lower_lt_upper(rank, lo, hi) decides whether
// cell lo at rank-1 lies below cell hi at rank in the poset order. Support
// means nonzero boundary coefficients occur only between comparable cells.
struct SupportedComplex {
  GradedComplex chain;
  std::function<bool(int rank, std::uint32_t lower, std::uint32_t upper)> lower_lt_upper;

  bool verify_support() const;
};

// A partial involution pairing cells of adjacent ranks.
struct MatchEdge {
  int upper_rank = 0;
  std::uint32_t upper = 0;  // cell index at upper_rank
  std::uint32_t lower = 0;  // cell index at upper_rank - 1
};

struct Matching {
  std::vector<MatchEdge> edges;
};

// Outcome of certifying a matching against a supported complex.
struct MorseReport {
  bool acyclic = false;
  // When not acyclic: labels along one directed cycle of D(P,M), alternating
  // lower, matched upper, lower, ... (replayable witness).
  std::vector<std::string> cycle_witness;
  bool unit_coefficients = false;
  std::vector<std::vector<std::uint32_t>> critical_index;  // per rank, ascending
  std::vector<std::vector<std::string>> critical;          // same cells, labelled
  bool parity_condition = false;    // all critical cells in ranks of one parity
  bool vanishing_condition = false; // boundary rows and columns vanish at critical cells
  // Per-rank critical-cell counts; present only when acyclic, unit
  // coefficients, and one of the two conditions above all hold.
  std::optional<std::vector<std::size_t>> concluded_homology;

  std::size_t critical_count() const;
};

// Re-derives everything from scratch: matching structure, acyclicity of the
// mixed-direction digraph D(P,M) (checked rank pair by rank pair, since any
// directed cycle alternates between two consecutive ranks), unit boundary
// coefficients on matched edges, and the two homology-concluding conditions.
// Structural defects of the matching (bad indices, reused cells) throw
// std::invalid_argument; a zero coefficient on a matched edge is reported as
// unit_coefficients = false instead.
MorseReport certify(const SupportedComplex& sc, const Matching& m);

}  // namespace homcon
