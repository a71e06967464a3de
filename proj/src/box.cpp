#include "homcon/box.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace homcon {

int Tableau::entry_sum() const {
  int s = 0;
  for (int v : e) s += v;
  return s;
}

int Tableau::rank() const { return entry_sum() - c * (r * (r - 1) / 2); }

bool Tableau::valid() const {
  if (static_cast<int>(e.size()) != r * c) return false;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      int v = at(i, j);
      if (v < 0 || v > r + t - 1) return false;
      if (j > 0 && at(i, j - 1) > v) return false;
      if (i > 0 && at(i - 1, j) >= v) return false;
    }
  return true;
}

std::string Tableau::label() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < r; ++i) {
    if (i) os << ",";
    os << "[";
    for (int j = 0; j < c; ++j) {
      if (j) os << ",";
      os << at(i, j);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<Tableau> enumerate_ssyt(int r, int c, int t, const Limits& limits) {
  if (r < 1 || c < 1 || t < 0) throw std::invalid_argument("enumerate_ssyt: bad box shape");
  if (r * c * t > limits.box_volume)
    throw LimitError("tableau enumeration for a box of volume " + std::to_string(r * c * t) +
                     " is above the configured cap of " + std::to_string(limits.box_volume));
  std::vector<Tableau> out;
  Tableau T{r, c, t, std::vector<int>(r * c, 0)};
  int maxval = r + t - 1;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == r * c) {
      out.push_back(T);
      return;
    }
    int i = pos / c, j = pos % c;
    int lo = 0;
    if (j > 0) lo = std::max(lo, T.at(i, j - 1));
    if (i > 0) lo = std::max(lo, T.at(i - 1, j) + 1);
    int hi = maxval - (r - 1 - i);  // room for the strictly increasing column below
    for (int v = lo; v <= hi; ++v) {
      T.at(i, j) = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<int> tableau_to_plane_partition(const Tableau& T) {
  std::vector<int> pp(T.e);
  for (int i = 0; i < T.r; ++i)
    for (int j = 0; j < T.c; ++j) pp[i * T.c + j] -= i;
  return pp;
}

namespace {

// Number of copies of v in row i that do not have v-1 directly above them
// (row 0 counts all copies).
int copies_lacking_above(const Tableau& T, int i, int v) {
  int count = 0;
  for (int j = 0; j < T.c; ++j)
    if (T.at(i, j) == v && (i == 0 || T.at(i - 1, j) != v - 1)) ++count;
  return count;
}

int leftmost_copy(const Tableau& T, int i, int v) {
  for (int j = 0; j < T.c; ++j)
    if (T.at(i, j) == v) return j;
  return -1;
}

int rightmost_copy(const Tableau& T, int i, int v) {
  for (int j = T.c - 1; j >= 0; --j)
    if (T.at(i, j) == v) return j;
  return -1;
}

// Case (1) of the matching: odd v in row i, oddly many copies without v-1
// above. This is also exactly the boundary rule.
bool decrementable(const Tableau& T, int i, int v) {
  return (v & 1) && leftmost_copy(T, i, v) >= 0 && (copies_lacking_above(T, i, v) & 1);
}

// Case (2): even v < r+t-1 whose rightmost copy has no v+1 directly below,
// with evenly many copies of v+1 in the row lacking v above.
bool incrementable(const Tableau& T, int i, int v) {
  if ((v & 1) || v >= T.r + T.t - 1) return false;
  int jr = rightmost_copy(T, i, v);
  if (jr < 0) return false;
  if (i + 1 < T.r && T.at(i + 1, jr) == v + 1) return false;
  return (copies_lacking_above(T, i, v + 1) & 1) == 0;
}

}  // namespace

std::vector<Tableau> box_boundary(const Tableau& T) {
  std::vector<Tableau> out;
  for (int i = 0; i < T.r; ++i)
    for (int v = 1; v <= T.r + T.t - 1; v += 2) {
      if (!decrementable(T, i, v)) continue;
      Tableau S = T;
      S.at(i, leftmost_copy(T, i, v)) -= 1;
      if (!S.valid())
        throw std::logic_error("box boundary: decrement produced an invalid tableau");
      out.push_back(std::move(S));
    }
  return out;
}

std::optional<Tableau> box_matching(const Tableau& T) {
  for (int i = 0; i < T.r; ++i)
    for (int v = 0; v <= T.r + T.t - 1; ++v) {
      if (v & 1 ? decrementable(T, i, v) : incrementable(T, i, v)) {
        Tableau S = T;
        if (v & 1)
          S.at(i, leftmost_copy(T, i, v)) -= 1;
        else
          S.at(i, rightmost_copy(T, i, v)) += 1;
        if (!S.valid()) throw std::logic_error("box matching: edit produced an invalid tableau");
        return S;
      }
    }
  return std::nullopt;
}

std::vector<Tableau> box_critical_cells(int r, int c, int t, const Limits& limits) {
  std::vector<Tableau> out;
  for (const Tableau& T : enumerate_ssyt(r, c, t, limits))
    if (!box_matching(T)) out.push_back(T);
  return out;
}

bool box_critical_shape(const Tableau& T) {
  for (int i = 0; i < T.r; ++i)
    for (int j = 0; j < T.c; ++j) {
      int v = T.at(i, j);
      if (!(v & 1) && v < T.r + T.t - 1) {
        if (i + 1 >= T.r || T.at(i + 1, j) != v + 1) return false;
      }
    }
  for (int i = 0; i < T.r; ++i)
    for (int v = 1; v <= T.r + T.t - 1; v += 2)
      if (copies_lacking_above(T, i, v) & 1) return false;
  return true;
}

std::string DominoTableau::label() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    const Tile& tile = tiles[i];
    if (i) os << " ";
    os << (tile.kind == TileKind::Vertical ? "V" : tile.kind == TileKind::Horizontal ? "H" : "M")
       << "(" << tile.row << "," << tile.col << ")=" << tile.label;
  }
  return os.str();
}

bool DominoTableau::semistandard() const {
  // labels written back onto the grid; comparisons apply across distinct tiles
  std::vector<int> grid(r * c, -1), tile_id(r * c, -1);
  for (std::size_t id = 0; id < tiles.size(); ++id) {
    const Tile& tile = tiles[id];
    auto put = [&](int i, int j) {
      if (i >= r || j >= c || grid[i * c + j] != -1) return false;
      grid[i * c + j] = tile.label;
      tile_id[i * c + j] = static_cast<int>(id);
      return true;
    };
    bool ok = put(tile.row, tile.col);
    if (tile.kind == TileKind::Vertical) ok = ok && put(tile.row + 1, tile.col);
    if (tile.kind == TileKind::Horizontal) ok = ok && put(tile.row, tile.col + 1);
    if (!ok) return false;
  }
  for (int idx = 0; idx < r * c; ++idx)
    if (grid[idx] == -1) return false;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      if (j + 1 < c && tile_id[i * c + j] != tile_id[i * c + j + 1] &&
          grid[i * c + j] > grid[i * c + j + 1])
        return false;
      if (i + 1 < r && tile_id[i * c + j] != tile_id[(i + 1) * c + j] &&
          grid[i * c + j] >= grid[(i + 1) * c + j])
        return false;
    }
  return true;
}

DominoTableau to_domino(const Tableau& T) {
  if (box_matching(T)) throw std::invalid_argument("to_domino: tableau is not a critical cell");
  int maxval = T.r + T.t - 1;
  DominoTableau dt;
  dt.r = T.r;
  dt.c = T.c;
  std::vector<bool> used(T.r * T.c, false);
  // vertical dominoes: each non-maximal even value sits on its odd successor
  for (int i = 0; i < T.r; ++i)
    for (int j = 0; j < T.c; ++j) {
      int v = T.at(i, j);
      if ((v & 1) || v >= maxval) continue;
      if (i + 1 >= T.r || T.at(i + 1, j) != v + 1)
        throw std::logic_error("to_domino: even value without its successor below");
      dt.tiles.push_back({DominoTableau::TileKind::Vertical, i, j, v + 1});
      used[i * T.c + j] = used[(i + 1) * T.c + j] = true;
    }
  // monominoes: maximal even values, necessarily in the last row
  if (!(maxval & 1)) {
    for (int j = 0; j < T.c; ++j)
      if (!used[(T.r - 1) * T.c + j] && T.at(T.r - 1, j) == maxval) {
        dt.tiles.push_back({DominoTableau::TileKind::Monomino, T.r - 1, j, maxval});
        used[(T.r - 1) * T.c + j] = true;
      }
  }
  // remaining odd values pair up horizontally within their row
  for (int i = 0; i < T.r; ++i)
    for (int j = 0; j < T.c; ++j) {
      if (used[i * T.c + j]) continue;
      int v = T.at(i, j);
      if (!(v & 1) || j + 1 >= T.c || used[i * T.c + j + 1] || T.at(i, j + 1) != v)
        throw std::logic_error("to_domino: leftover entries do not tile by horizontal dominoes");
      dt.tiles.push_back({DominoTableau::TileKind::Horizontal, i, j, v});
      used[i * T.c + j] = used[i * T.c + j + 1] = true;
    }
  if (!dt.semistandard()) throw std::logic_error("to_domino: tiling is not semistandard");
  return dt;
}

std::vector<std::pair<int, int>> decrement_moves(const Tableau& T) {
  std::vector<std::pair<int, int>> moves;
  for (int i = 0; i < T.r; ++i)
    for (int v = 1; v <= T.r + T.t - 1; v += 2)
      if (decrementable(T, i, v)) moves.emplace_back(i, v);
  return moves;
}

std::vector<std::pair<int, int>> increment_moves(const Tableau& T) {
  std::vector<std::pair<int, int>> moves;
  for (int i = 0; i < T.r; ++i)
    for (int v = 0; v <= T.r + T.t - 2; v += 2)
      if (incrementable(T, i, v)) moves.emplace_back(i, v);
  return moves;
}

std::vector<BooleanInterval> boolean_decomposition(int r, int c, int t, const Limits& limits) {
  std::map<std::vector<int>, std::vector<Tableau>> groups;
  for (const Tableau& T : enumerate_ssyt(r, c, t, limits)) {
    Tableau bottom = T;
    for (;;) {
      auto moves = decrement_moves(bottom);
      if (moves.empty()) break;
      bottom.at(moves[0].first, leftmost_copy(bottom, moves[0].first, moves[0].second)) -= 1;
    }
    groups[bottom.e].push_back(T);
  }
  std::vector<BooleanInterval> out;
  for (auto& [bottom_entries, members] : groups) {
    BooleanInterval iv;
    iv.bottom = Tableau{r, c, t, bottom_entries};
    iv.free_moves = increment_moves(iv.bottom);
    iv.top = iv.bottom;
    std::vector<int> cells;
    for (auto [row, v] : iv.free_moves) cells.push_back(row * c + rightmost_copy(iv.bottom, row, v));
    for (int cell : cells) iv.top.e[cell] += 1;
    if (!iv.top.valid()) throw std::logic_error("boolean_decomposition: invalid top tableau");
    std::sort(members.begin(), members.end());
    iv.members = std::move(members);
    out.push_back(std::move(iv));
  }
  return out;
}

bool schur_specialization_check(int r, int c, int t, const Limits& limits) {
  QPolynomial sum;
  QPolynomial one_plus_q(std::vector<BigInt>{1, 1});
  for (const BooleanInterval& iv : boolean_decomposition(r, c, t, limits)) {
    QPolynomial term = QPolynomial::monomial(1, iv.bottom.entry_sum());
    for (std::size_t i = 0; i < iv.free_moves.size(); ++i) term = term * one_plus_q;
    sum = sum + term;
  }
  QPolynomial rhs = QPolynomial::monomial(1, c * (r * (r - 1) / 2)) * macmahon(r, c, t);
  return sum == rhs;
}

BoxComplex build_box_complex(int r, int c, int t, const Limits& limits) {
  BoxComplex bc;
  bc.r = r;
  bc.c = c;
  bc.t = t;
  int top = r * c * t;
  bc.cells.assign(top + 1, {});
  for (const Tableau& T : enumerate_ssyt(r, c, t, limits)) bc.cells[T.rank()].push_back(T);

  bc.complex.labels.resize(top + 1);
  bc.complex.boundary.resize(top + 1);
  for (int i = 0; i <= top; ++i)
    for (const Tableau& T : bc.cells[i]) bc.complex.labels[i].push_back(T.label());

  bc.complex.boundary[0] = F2Matrix(0, bc.cells[0].size());
  for (int i = 1; i <= top; ++i) {
    F2Matrix d(bc.cells[i - 1].size(), bc.cells[i].size());
    for (std::size_t col = 0; col < bc.cells[i].size(); ++col)
      for (const Tableau& S : box_boundary(bc.cells[i][col])) {
        auto at = std::lower_bound(bc.cells[i - 1].begin(), bc.cells[i - 1].end(), S);
        d.set(at - bc.cells[i - 1].begin(), col, true);
      }
    bc.complex.boundary[i] = std::move(d);
  }
  bc.complex.validate();
  return bc;
}

SupportedComplex box_supported_complex(const BoxComplex& bc) {
  SupportedComplex sc;
  sc.chain = bc.complex;
  const auto& cells = bc.cells;
  sc.lower_lt_upper = [&cells](int rank, std::uint32_t lo, std::uint32_t hi) {
    const Tableau& a = cells[rank - 1][lo];
    const Tableau& b = cells[rank][hi];
    for (std::size_t i = 0; i < a.e.size(); ++i)
      if (a.e[i] > b.e[i]) return false;
    return true;
  };
  return sc;
}

Matching box_morse_matching(const BoxComplex& bc) {
  Matching m;
  for (int i = 0; i + 1 < static_cast<int>(bc.cells.size()); ++i)
    for (std::size_t lo = 0; lo < bc.cells[i].size(); ++lo) {
      auto mu = box_matching(bc.cells[i][lo]);
      if (!mu || mu->rank() != i + 1) continue;
      auto at = std::lower_bound(bc.cells[i + 1].begin(), bc.cells[i + 1].end(), *mu);
      m.edges.push_back(MatchEdge{i + 1, static_cast<std::uint32_t>(at - bc.cells[i + 1].begin()),
                                  static_cast<std::uint32_t>(lo)});
    }
  return m;
}

}  // namespace homcon
