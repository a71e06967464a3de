#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homcon/errors.hpp"
#include "homcon/morse.hpp"
#include "homcon/permgroup.hpp"

namespace homcon {

// An integer partition inside a k x l rectangle, stored with all k parts
// (zeros retained: the multiplicity of 0 matters to the matching rule).
struct RectPartition {
  std::vector<int> parts;  // weakly decreasing, length k, parts[0] <= l
  int k = 0, l = 0;

  int rank() const;         // sum of parts
  bool valid() const;
  std::string label() const;  // "(2,1,0)"
  RectPartition complement() const;
  bool self_complementary() const { return *this == complement(); }
  bool operator==(const RectPartition& rhs) const { return parts == rhs.parts; }
  bool operator<(const RectPartition& rhs) const { return parts < rhs.parts; }
};

// All partitions in the rectangle, in lexicographic order of the parts
// vector.
std::vector<RectPartition> enumerate_rect_partitions(int k, int l);

// Boundary coefficient of the single-part reduction lambda_i -> lambda_i - 1:
// (l - lambda_i + 1) * (mult_lambda(lambda_i - 1) + 1) mod 2. The reduction
// must keep the sequence weakly decreasing; throws std::invalid_argument
// otherwise. part_index is 0-based.
int rect_boundary_coefficient(const RectPartition& p, int part_index);

// The acyclic matching: locates A (last nonzero part with the parity of l)
// and B (first occurrence of the smallest part value of opposite parity to l
// with odd multiplicity, possibly 0), then decrements A's part if A < B or
// increments B's part if A > B. Returns nullopt iff neither exists.
std::optional<RectPartition> rect_matching(const RectPartition& p);

// Unmatched cells: every nonzero part has even multiplicity and parity
// opposite to l, and when l is odd the part 0 also has even multiplicity.
std::vector<RectPartition> rect_critical_cells(int k, int l);

// Lattice-path word of the partition: steps from the southwest to the
// northeast corner of the rectangle along the diagram's boundary, k 'N's and
// l 'E's; the empty partition reads N^k E^l.
std::string ne_word(const RectPartition& p);
RectPartition partition_from_word(const std::string& word, int k, int l);

// Bijection from critical cells onto self-complementary partitions, by
// halving the run-length form of the word and reassembling it as a
// palindrome. Requires p critical and not both k, l odd.
RectPartition phi(const RectPartition& p);

// Ferrers diagram of p as a bitmask over the k*l boxes, numbered row-major.
std::uint64_t ferrers_mask(const RectPartition& p);

struct RectComplex {
  int k = 0, l = 0;
  std::vector<std::vector<RectPartition>> cells;  // per rank, lex order
  GradedComplex complex;
};

RectComplex build_rect_complex(int k, int l);

// Adapters for the Morse engine: the containment order supports the complex.
// The comparability oracle holds a reference to rc, which must outlive the
// returned value.
SupportedComplex rect_supported_complex(const RectComplex& rc);
Matching rect_morse_matching(const RectComplex& rc);

// Compares the rectangle boundary matrices against each of the four orbit
// complexes of the wreath row-stabilizer on the k*l boxes, under the
// bijection sending a partition to the orbit of its Ferrers diagram.
// matched[kind] is true when every matrix agrees bit for bit.
std::array<bool, 4> rect_orbit_crosscheck(const RectComplex& rc, const Limits& limits = {});

}  // namespace homcon
