#pragma once

#include <string>
#include <vector>

#include "homcon/gf2.hpp"

namespace homcon {

// A finite chain complex over GF(2) with labelled basis cells. Storage is
// always homological: boundary[i] maps rank i to rank i-1 (rows indexed by
// rank i-1 cells, columns by rank i cells); boundary[0] has zero rows.
//
// Complexes obtained from a cochain complex by reversing the grading set
// reversed_grading; for those, stored rank j holds the cells of original
// grade top-j, and reporting functions translate back.
struct GradedComplex {
  std::vector<std::vector<std::string>> labels;  // labels[i]: cells at stored rank i
  std::vector<F2Matrix> boundary;                // boundary[i]: rank i -> rank i-1
  bool reversed_grading = false;

  int top_rank() const { return static_cast<int>(labels.size()) - 1; }
  std::size_t dim(int i) const { return labels[i].size(); }

  // Chain dimensions in the original grading.
  std::vector<std::size_t> dims() const;

  // Shape consistency between labels and boundary matrices.
  void validate() const;  // throws std::logic_error

  // boundary(i) * boundary(i+1) == 0 for all i.
  bool is_chain_complex() const;
};

// dim H_i = dim C_i - rank d_i - rank d_{i+1}, reported in the original
// grading. Rank computations for distinct i run on independent copies and
// may execute concurrently.
std::vector<std::size_t> homology_ranks(const GradedComplex& c);

// Alternating sum of chain dimensions in the original grading.
long long euler_characteristic(const GradedComplex& c);

}  // namespace homcon
