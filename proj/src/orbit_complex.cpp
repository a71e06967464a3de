#include "homcon/orbit_complex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace homcon {

std::string to_string(ComplexKind kind) {
  switch (kind) {
    case ComplexKind::InvariantsD: return "inv-d";
    case ComplexKind::CoinvariantsD: return "coinv-d";
    case ComplexKind::InvariantsU: return "inv-u";
    case ComplexKind::CoinvariantsU: return "coinv-u";
  }
  return {};
}

ComplexKind complex_kind_from_string(const std::string& s) {
  if (s == "inv-d") return ComplexKind::InvariantsD;
  if (s == "coinv-d") return ComplexKind::CoinvariantsD;
  if (s == "inv-u") return ComplexKind::InvariantsU;
  if (s == "coinv-u") return ComplexKind::CoinvariantsU;
  throw ParseError("unknown complex kind '" + s + "' (want inv-d, coinv-d, inv-u, coinv-u)", 0);
}

namespace {

std::vector<std::uint64_t> orbit_members(const PermGroup& g, std::uint64_t start) {
  std::vector<std::uint64_t> members{start};
  std::unordered_set<std::uint64_t> seen{start};
  for (std::size_t head = 0; head < members.size(); ++head) {
    std::uint64_t cur = members[head];
    for (const Permutation& gen : g.generators) {
      std::uint64_t nx = gen.apply_mask(cur);
      if (seen.insert(nx).second) members.push_back(nx);
    }
  }
  return members;
}

struct OrbitBuckets {
  // canonical masks per subset size, ascending (emitted that way by the sweep)
  std::vector<std::vector<std::uint64_t>> masks;
  std::vector<std::unordered_map<std::uint64_t, std::uint32_t>> index;
};

OrbitBuckets bucket_orbits(const PermGroup& g, const Limits& limits) {
  OrbitBuckets b;
  b.masks.resize(g.n + 1);
  b.index.resize(g.n + 1);
  for (const SubsetOrbit& orb : subset_orbits(g, limits)) {
    b.index[orb.member_size].emplace(orb.canonical,
                                     static_cast<std::uint32_t>(b.masks[orb.member_size].size()));
    b.masks[orb.member_size].push_back(orb.canonical);
  }
  return b;
}

// invariants-D boundary at rank i: entry (row S-orbit, col T-orbit) counts,
// mod 2, members T' of the column orbit containing the row's canonical mask.
// Iterates over the column orbit's members and their (i-1)-subsets, crediting
// hits on canonical masks.
F2Matrix inv_down(const PermGroup& g, const OrbitBuckets& b, int i) {
  F2Matrix d(b.masks[i - 1].size(), b.masks[i].size());
  for (std::uint32_t col = 0; col < b.masks[i].size(); ++col) {
    for (std::uint64_t member : orbit_members(g, b.masks[i][col])) {
      std::uint64_t rest = member;
      while (rest) {
        std::uint64_t low = rest & (rest - 1);
        std::uint64_t sub = member ^ (rest ^ low);
        rest = low;
        auto it = b.index[i - 1].find(sub);
        if (it != b.index[i - 1].end()) d.flip(it->second, col);
      }
    }
  }
  return d;
}

// coinvariants-D boundary at rank i: entry (row S-orbit, col T-orbit) counts,
// mod 2, members S' of the row orbit contained in the column's canonical
// mask. Iterates over the row orbit's members and their (i)-supersets.
F2Matrix coinv_down(const PermGroup& g, const OrbitBuckets& b, int i) {
  F2Matrix d(b.masks[i - 1].size(), b.masks[i].size());
  std::uint64_t full = (std::uint64_t(1) << g.n) - 1;
  for (std::uint32_t row = 0; row < b.masks[i - 1].size(); ++row) {
    for (std::uint64_t member : orbit_members(g, b.masks[i - 1][row])) {
      std::uint64_t rest = full & ~member;
      while (rest) {
        std::uint64_t bit = rest & (~rest + 1);
        rest ^= bit;
        auto it = b.index[i].find(member | bit);
        if (it != b.index[i].end()) d.flip(row, it->second);
      }
    }
  }
  return d;
}

}  // namespace

GradedComplex build_orbit_complex(const PermGroup& g, ComplexKind kind, const Limits& limits) {
  OrbitBuckets b = bucket_orbits(g, limits);
  int n = g.n;

  bool down_kind = kind == ComplexKind::InvariantsD || kind == ComplexKind::CoinvariantsD;
  // The needed raw family: D on invariants also yields U on coinvariants by
  // transposition, and vice versa.
  bool need_inv = kind == ComplexKind::InvariantsD || kind == ComplexKind::CoinvariantsU;
  std::vector<F2Matrix> raw(n + 1);
  for (int i = 1; i <= n; ++i) raw[i] = need_inv ? inv_down(g, b, i) : coinv_down(g, b, i);

  GradedComplex c;
  c.labels.resize(n + 1);
  c.boundary.resize(n + 1);
  if (down_kind) {
    for (int i = 0; i <= n; ++i) {
      for (std::uint64_t m : b.masks[i]) c.labels[i].push_back(subset_label(m));
      c.boundary[i] = i == 0 ? F2Matrix(0, b.masks[0].size()) : std::move(raw[i]);
    }
  } else {
    // cochain kind: stored rank j holds the cells of subset size n-j, and the
    // differential at stored rank j is the up map out of size n-j, i.e. the
    // transpose of the matching down map at size n-j+1.
    c.reversed_grading = true;
    for (int j = 0; j <= n; ++j) {
      for (std::uint64_t m : b.masks[n - j]) c.labels[j].push_back(subset_label(m));
      c.boundary[j] =
          j == 0 ? F2Matrix(0, b.masks[n].size()) : raw[n - j + 1].transposed();
    }
  }
  c.validate();
  return c;
}

bool masked_homotopy_check(const PermGroup& g, std::uint64_t s_mask, const Limits& limits) {
  int n = g.n;
  if (n > limits.sweep_n)
    throw LimitError("masked homotopy check on the full complex needs 2^" + std::to_string(n) +
                     " cells, above the configured cap of n <= " + std::to_string(limits.sweep_n));
  for (const Permutation& gen : g.generators)
    if (gen.apply_mask(s_mask) != s_mask)
      throw std::invalid_argument("masked_homotopy_check: S is not G-stable");

  // full complex: rank i cells are all i-subsets, ascending by mask
  std::vector<std::vector<std::uint64_t>> cells(n + 1);
  for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); ++m)
    cells[std::popcount(m)].push_back(m);
  auto index_of = [&](int rank, std::uint64_t m) {
    const auto& v = cells[rank];
    return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), m) - v.begin());
  };

  std::vector<F2Matrix> down(n + 2), up(n + 1);  // down[i]: i -> i-1; up[i]: i -> i+1
  down[0] = F2Matrix(0, 1);
  down[n + 1] = F2Matrix(cells[n].size(), 0);
  for (int i = 1; i <= n; ++i) {
    down[i] = F2Matrix(cells[i - 1].size(), cells[i].size());
    for (std::size_t col = 0; col < cells[i].size(); ++col) {
      std::uint64_t m = cells[i][col], rest = m;
      while (rest) {
        std::uint64_t low = rest & (rest - 1);
        down[i].flip(index_of(i - 1, m ^ (rest ^ low)), col);
        rest = low;
      }
    }
  }
  for (int i = 0; i <= n; ++i) {
    up[i] = F2Matrix(i + 1 <= n ? cells[i + 1].size() : 0, cells[i].size());
    if (i == n) continue;
    for (std::size_t col = 0; col < cells[i].size(); ++col) {
      std::uint64_t m = cells[i][col], rest = s_mask & ~m;
      while (rest) {
        std::uint64_t bit = rest & (~rest + 1);
        rest ^= bit;
        up[i].flip(index_of(i + 1, m | bit), col);
      }
    }
  }

  bool odd = std::popcount(s_mask) & 1;
  for (int i = 0; i <= n; ++i) {
    F2Matrix lhs = down[i + 1] * up[i];
    if (i > 0) lhs = lhs + up[i - 1] * down[i];
    F2Matrix rhs = odd ? F2Matrix::identity(cells[i].size())
                       : F2Matrix(cells[i].size(), cells[i].size());
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace homcon
