#include "oracles.hpp"

#include <algorithm>
#include <bit>

namespace oracles {

int naive_rank(std::vector<std::vector<int>> m) {
  if (m.empty() || m[0].empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] % 2 == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[static_cast<std::size_t>(rank)]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == static_cast<std::size_t>(rank) || m[i][col] % 2 == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = (m[i][j] + m[rank][j]) % 2;
    }
    ++rank;
  }
  return rank;
}

std::uint64_t naive_canonical(const homcon::PermGroup& g, std::uint64_t mask) {
  std::set<std::uint64_t> orbit{mask};
  std::vector<std::uint64_t> frontier{mask};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t m : frontier)
      for (const homcon::Permutation& gen : g.generators) {
        std::uint64_t image = 0;
        for (int p = 0; p < g.n; ++p)
          if ((m >> p) & 1) image |= std::uint64_t(1) << gen(p);
        if (orbit.insert(image).second) next.push_back(image);
      }
    frontier = std::move(next);
  }
  return *orbit.begin();
}

std::vector<long long> naive_orbit_counts(const homcon::PermGroup& g) {
  std::vector<long long> counts(g.n + 1, 0);
  for (std::uint64_t m = 0; m < (std::uint64_t(1) << g.n); ++m)
    if (naive_canonical(g, m) == m) counts[std::popcount(m)] += 1;
  return counts;
}

long long naive_self_complementary_orbits(const homcon::PermGroup& g) {
  std::uint64_t full = (std::uint64_t(1) << g.n) - 1;
  long long count = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t(1) << g.n); ++m)
    if (naive_canonical(g, m) == m && naive_canonical(g, full & ~m) == m) ++count;
  return count;
}

std::vector<std::vector<int>> naive_rect_partitions(int k, int l) {
  std::vector<std::vector<int>> out;
  int len = k + l;
  for (std::uint64_t word = 0; word < (std::uint64_t(1) << len); ++word) {
    if (std::popcount(word) != l) continue;  // exactly l east steps
    // reading the path from the southwest corner: parts from the bottom up
    std::vector<int> parts(k);
    int easts = 0, norths = 0;
    bool ok = true;
    for (int i = 0; i < len; ++i) {
      if ((word >> i) & 1) {
        ++easts;
      } else {
        if (norths >= k) {
          ok = false;
          break;
        }
        parts[k - 1 - norths] = easts;
        ++norths;
      }
    }
    if (ok && norths == k) out.push_back(parts);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long naive_self_complementary_partitions(int k, int l) {
  long long count = 0;
  for (const auto& parts : naive_rect_partitions(k, l)) {
    bool self = true;
    for (int i = 0; i < k; ++i)
      if (parts[i] != l - parts[k - 1 - i]) self = false;
    count += self;
  }
  return count;
}

std::vector<std::vector<int>> naive_plane_partitions(int r, int c, int t) {
  std::vector<std::vector<int>> out;
  std::vector<int> grid(r * c, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == r * c) {
      out.push_back(grid);
      return;
    }
    int i = pos / c, j = pos % c;
    int lo = 0;
    if (j > 0) lo = std::max(lo, grid[i * c + j - 1]);
    if (i > 0) lo = std::max(lo, grid[(i - 1) * c + j]);
    for (int v = lo; v <= t; ++v) {
      grid[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

long long naive_self_complementary_plane_partitions(int r, int c, int t) {
  long long count = 0;
  for (const auto& grid : naive_plane_partitions(r, c, t)) {
    bool self = true;
    for (int i = 0; i < r && self; ++i)
      for (int j = 0; j < c; ++j)
        if (grid[i * c + j] != t - grid[(r - 1 - i) * c + (c - 1 - j)]) {
          self = false;
          break;
        }
    count += self;
  }
  return count;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace oracles
