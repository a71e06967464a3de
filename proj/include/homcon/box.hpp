#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homcon/errors.hpp"
#include "homcon/morse.hpp"
#include "homcon/qpoly.hpp"

namespace homcon {

// A semistandard Young tableau of rectangular shape r x c with entries in
// [0, r+t-1]: rows weakly increasing, columns strictly increasing. In graded
// bijection with plane partitions in an r x c x t box.
struct Tableau {
  int r = 0, c = 0, t = 0;
  std::vector<int> e;  // r*c entries, row-major

  int at(int row, int col) const { return e[row * c + col]; }
  int& at(int row, int col) { return e[row * c + col]; }
  int entry_sum() const;
  int rank() const;  // entry_sum - c*binom(r,2), in [0, r*c*t]
  bool valid() const;
  std::string label() const;  // "[[0,2],[1,3]]"
  bool operator==(const Tableau& rhs) const { return e == rhs.e; }
  bool operator<(const Tableau& rhs) const { return e < rhs.e; }
};

// All tableaux in row-major lexicographic order; the count equals
// macmahon(r,c,t) at q=1. Requires r*c*t <= limits.box_volume.
std::vector<Tableau> enumerate_ssyt(int r, int c, int t, const Limits& limits = {});

// The plane partition corresponding to T (subtract i from row i); entries
// weakly increase along rows and columns and lie in [0, t].
std::vector<int> tableau_to_plane_partition(const Tableau& T);

// The boundary set B(T): for each row and odd value v present, decrement the
// leftmost copy of v iff the number of copies of v in that row without v-1
// directly above is odd. Results are valid tableaux; deterministic order
// (by row, then value).
std::vector<Tableau> box_boundary(const Tableau& T);

// The acyclic matching: scan rows top down, values small to large; an odd
// value qualifies under the decrement rule above, an even value i < r+t-1
// qualifies when its rightmost copy has no i+1 directly below and the copies
// of i+1 in the row without i directly above number evenly. Decrements the
// leftmost odd copy or increments the rightmost even copy. Conditions about
// row 0 or row r+1 hold vacuously. Returns nullopt iff no row qualifies.
std::optional<Tableau> box_matching(const Tableau& T);

std::vector<Tableau> box_critical_cells(int r, int c, int t, const Limits& limits = {});

// Structural description of unmatched cells: every even value 2i < r+t-1 has
// 2i+1 directly below it, and per row each odd value has evenly many copies
// without the preceding even value above.
bool box_critical_shape(const Tableau& T);

// A tiling of the r x c rectangle by labelled tiles: vertical dominoes
// (an even value over its odd successor, relabelled to the odd value),
// horizontal dominoes (paired equal odd values), and, when r+t-1 is even,
// monominoes of maximal value in the last row.
struct DominoTableau {
  enum class TileKind { Vertical, Horizontal, Monomino };
  struct Tile {
    TileKind kind;
    int row, col;  // top / left cell of the tile
    int label;
  };
  int r = 0, c = 0;
  std::vector<Tile> tiles;

  std::string label() const;
  bool semistandard() const;  // weak rows / strict columns at the tile level
};

// Bijection from critical cells to semistandard domino tableaux of bounded
// odd value; throws std::invalid_argument if T is not critical.
DominoTableau to_domino(const Tableau& T);

// One block of the Boolean-algebra decomposition: the interval between a
// decrement-free tableau and its increment closure.
struct BooleanInterval {
  Tableau bottom, top;
  std::vector<std::pair<int, int>> free_moves;  // E(bottom): (row, even value)
  std::vector<Tableau> members;                 // ascending, 2^|free_moves| of them
};

// (row, odd value) pairs decrementable by the matching's case (1), and
// (row, even value) pairs incrementable by case (2).
std::vector<std::pair<int, int>> decrement_moves(const Tableau& T);
std::vector<std::pair<int, int>> increment_moves(const Tableau& T);

// Partition of SSYT(r,c,t) into intervals, ordered by bottom tableau. The
// rank-0 intervals are exactly the critical cells.
std::vector<BooleanInterval> boolean_decomposition(int r, int c, int t,
                                                   const Limits& limits = {});

// sum over bottoms of q^{entry sum} (1+q)^{|E|}, which must equal
// q^{c*binom(r,2)} * macmahon(r,c,t) coefficientwise.
bool schur_specialization_check(int r, int c, int t, const Limits& limits = {});

struct BoxComplex {
  int r = 0, c = 0, t = 0;
  std::vector<std::vector<Tableau>> cells;  // per rank, lex order
  GradedComplex complex;
};

BoxComplex build_box_complex(int r, int c, int t, const Limits& limits = {});

// Morse-engine adapters; the oracle references bc, which must outlive the
// returned value.
SupportedComplex box_supported_complex(const BoxComplex& bc);
Matching box_morse_matching(const BoxComplex& bc);

}  // namespace homcon
