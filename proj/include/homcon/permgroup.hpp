#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homcon/errors.hpp"
#include "homcon/qpoly.hpp"

namespace homcon {

// A permutation of {0,...,n-1}, stored as its image table. All textual I/O is
// 1-indexed to match combinatorial convention; internals are 0-indexed.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int n);  // identity
  explicit Permutation(std::vector<int> image);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int point) const { return img_[point]; }
  const std::vector<int>& image() const { return img_; }

  // Applies the permutation to a subset given as a bitmask over the points.
  std::uint64_t apply_mask(std::uint64_t mask) const;

  Permutation compose(const Permutation& inner) const;  // this after inner
  Permutation inverse() const;
  bool is_identity() const;

  // Nontrivial cycles, each rotated to start at its least point, sorted by
  // least point.
  std::vector<std::vector<int>> cycles() const;
  std::vector<int> cycle_lengths() const;  // includes fixed points
  std::string to_cycle_string() const;     // 1-indexed, "(1 2)(3 4)"; identity -> "(1)"

  bool operator==(const Permutation& rhs) const { return img_ == rhs.img_; }
  bool operator<(const Permutation& rhs) const { return img_ < rhs.img_; }

private:
  std::vector<int> img_;
};

// A finitely generated subgroup of the symmetric group on n points, plus the
// structured spec it was parsed from (for canonical re-rendering).
struct PermGroup {
  enum class Kind { Cyclic, Symmetric, Wreath, Explicit };
  int n = 0;
  std::vector<Permutation> generators;
  Kind kind = Kind::Explicit;
  int param1 = 0, param2 = 0;  // cyclic/symmetric: n; wreath: k, l
};

// One orbit of the group action on subsets of the ground set.
struct SubsetOrbit {
  std::uint64_t canonical = 0;             // numerically least member bitmask
  std::uint64_t complement_canonical = 0;  // least bitmask in the complement orbit
  std::uint64_t orbit_size = 0;
  int member_size = 0;  // cardinality of every member

  bool self_complementary() const { return canonical == complement_canonical; }
};

// Grammar:
//   spec   := "cyclic:" INT | "symmetric:" INT | "wreath:" INT "," INT
//           | "gens:" INT ":" cycles ("," cycles)*
//   cycles := ( "(" INT (" " INT)* ")" )+
// Points are 1-indexed; cycles within one generator must be disjoint.
PermGroup parse_group(const std::string& spec);
std::string format_group(const PermGroup& g);

// All orbits of G on 2^[n], one entry per orbit, ordered by canonical mask.
// Requires n <= limits.sweep_n (full 2^n sweep).
std::vector<SubsetOrbit> subset_orbits(const PermGroup& g, const Limits& limits = {});

// Number of orbits equal to the orbit of their members' complements.
int self_complementary_orbit_count(const PermGroup& g, const Limits& limits = {});

// X(G,q): coefficient of q^i = number of orbits on i-subsets.
QPolynomial orbit_polynomial(const PermGroup& g, const Limits& limits = {});
QPolynomial orbit_polynomial(const std::vector<SubsetOrbit>& orbits, int n);

// Orbits of G on the ground set, each sorted, ordered by least point.
std::vector<std::vector<int>> point_orbits(const PermGroup& g);
bool has_odd_orbit(const PermGroup& g);
bool is_transitive(const PermGroup& g);

// Every element of the group, by closure of the generators under
// composition. Requires |G| <= limits.group_order.
std::vector<Permutation> group_elements(const PermGroup& g, const Limits& limits = {});
std::uint64_t group_order(const PermGroup& g, const Limits& limits = {});

// True iff some element of 2-power order >= 2 moves every point, i.e. has
// all cycle lengths in {2,4,8,...}.
bool has_two_power_derangement(const PermGroup& g, const Limits& limits = {});

// Least bitmask in the G-orbit of mask (no sweep; walks the one orbit).
std::uint64_t orbit_canonical(const PermGroup& g, std::uint64_t mask);

// "{1,3}" rendering of a subset bitmask (1-indexed, ascending).
std::string subset_label(std::uint64_t mask);

}  // namespace homcon
