#include "homcon/rect.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "homcon/orbit_complex.hpp"

namespace homcon {

int RectPartition::rank() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

bool RectPartition::valid() const {
  if (static_cast<int>(parts.size()) != k) return false;
  int prev = l;
  for (int p : parts) {
    if (p < 0 || p > prev) return false;
    prev = p;
  }
  return true;
}

std::string RectPartition::label() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  os << ")";
  return os.str();
}

RectPartition RectPartition::complement() const {
  RectPartition out{std::vector<int>(k), k, l};
  for (int i = 0; i < k; ++i) out.parts[i] = l - parts[k - 1 - i];
  return out;
}

std::vector<RectPartition> enumerate_rect_partitions(int k, int l) {
  std::vector<RectPartition> out;
  std::vector<int> parts(k, 0);
  // lexicographic generation over the parts vector
  auto rec = [&](auto&& self, int idx, int bound) -> void {
    if (idx == k) {
      out.push_back(RectPartition{parts, k, l});
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      parts[idx] = v;
      self(self, idx + 1, v);
    }
  };
  rec(rec, 0, l);
  return out;
}

int rect_boundary_coefficient(const RectPartition& p, int part_index) {
  if (part_index < 0 || part_index >= p.k || p.parts[part_index] < 1)
    throw std::invalid_argument("rect boundary: part not reducible");
  int v = p.parts[part_index];
  if (part_index + 1 < p.k && p.parts[part_index + 1] == v)
    throw std::invalid_argument("rect boundary: reduction breaks weak decrease");
  int mult = 0;
  for (int q : p.parts)
    if (q == v - 1) ++mult;
  return ((p.l - v + 1) * (mult + 1)) & 1;
}

namespace {

struct Locator {
  bool found = false;
  int value = 0;
  int index = 0;
};

// Last nonzero part with the parity of l.
Locator locate_a(const RectPartition& p) {
  Locator a;
  for (int i = 0; i < p.k; ++i)
    if (p.parts[i] > 0 && (p.parts[i] & 1) == (p.l & 1)) {
      a.found = true;
      a.value = p.parts[i];
      a.index = i;
    }
  return a;
}

// First occurrence of the smallest part value of opposite parity to l with
// odd multiplicity; the value 0 is eligible.
Locator locate_b(const RectPartition& p) {
  Locator b;
  for (int v = 0; v <= p.l; ++v) {
    if ((v & 1) == (p.l & 1)) continue;
    int mult = 0, first = -1;
    for (int i = 0; i < p.k; ++i)
      if (p.parts[i] == v) {
        ++mult;
        if (first < 0) first = i;
      }
    if (mult & 1) {
      b.found = true;
      b.value = v;
      b.index = first;
      return b;
    }
  }
  return b;
}

}  // namespace

std::optional<RectPartition> rect_matching(const RectPartition& p) {
  Locator a = locate_a(p), b = locate_b(p);
  if (!a.found && !b.found) return std::nullopt;
  RectPartition out = p;
  if (!b.found || (a.found && a.value < b.value))
    out.parts[a.index] -= 1;
  else
    out.parts[b.index] += 1;
  return out;
}

std::vector<RectPartition> rect_critical_cells(int k, int l) {
  std::vector<RectPartition> out;
  for (const RectPartition& p : enumerate_rect_partitions(k, l)) {
    bool crit = true;
    for (int v = 1; v <= l && crit; ++v) {
      int mult = 0;
      for (int q : p.parts)
        if (q == v) ++mult;
      if (mult == 0) continue;
      if ((v & 1) == (l & 1) || (mult & 1)) crit = false;
    }
    if (crit && (l & 1)) {
      int zeros = 0;
      for (int q : p.parts)
        if (q == 0) ++zeros;
      if (zeros & 1) crit = false;
    }
    if (crit) out.push_back(p);
  }
  return out;
}

std::string ne_word(const RectPartition& p) {
  std::string w;
  int prev = 0;
  for (int i = p.k - 1; i >= 0; --i) {
    w.append(p.parts[i] - prev, 'E');
    w.push_back('N');
    prev = p.parts[i];
  }
  w.append(p.l - prev, 'E');
  return w;
}

RectPartition partition_from_word(const std::string& word, int k, int l) {
  RectPartition p{std::vector<int>(k, 0), k, l};
  int easts = 0, norths = 0;
  for (char c : word) {
    if (c == 'E') {
      ++easts;
    } else if (c == 'N') {
      ++norths;
      if (norths > k) throw std::invalid_argument("word has too many N steps");
      p.parts[k - norths] = easts;
    } else {
      throw std::invalid_argument("word contains a letter other than N/E");
    }
  }
  if (norths != k || easts != l) throw std::invalid_argument("word has wrong step counts");
  return p;
}

namespace {

// Maximal runs of the word as (N-run, E-run) pairs; the leading N-run and the
// trailing E-run may be empty.
std::vector<std::pair<int, int>> word_groups(const std::string& w) {
  std::vector<std::pair<int, int>> groups;
  std::size_t pos = 0;
  while (pos < w.size()) {
    int ns = 0, es = 0;
    while (pos < w.size() && w[pos] == 'N') ++ns, ++pos;
    while (pos < w.size() && w[pos] == 'E') ++es, ++pos;
    groups.emplace_back(ns, es);
  }
  return groups;
}

std::string reversed(std::string s) {
  std::reverse(s.begin(), s.end());
  return s;
}

std::string runs(char c, int count) { return std::string(count, c); }

}  // namespace

RectPartition phi(const RectPartition& p) {
  int k = p.k, l = p.l;
  if ((k & 1) && (l & 1))
    throw std::invalid_argument("phi: no critical cells exist when k and l are both odd");
  auto criticals = rect_critical_cells(k, l);
  if (std::find(criticals.begin(), criticals.end(), p) == criticals.end())
    throw std::invalid_argument("phi: partition is not a critical cell");

  bool empty = p.rank() == 0;
  auto groups = word_groups(ne_word(p));
  std::string word;
  if (!(k & 1) && (l & 1)) {
    // k even, l odd: halve every run, last E-run rounds down; insert the
    // middle E.
    std::string half;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      half += runs('N', groups[i].first / 2);
      int e = groups[i].second;
      half += runs('E', i + 1 == groups.size() ? (e - 1) / 2 : e / 2);
    }
    word = half + "E" + reversed(half);
  } else if (!(k & 1) && !(l & 1)) {
    if (empty) {
      word = runs('N', k / 2) + runs('E', l) + runs('N', k / 2);
    } else {
      std::string half;
      for (std::size_t i = 0; i < groups.size(); ++i) {
        half += runs('N', groups[i].first / 2);
        int e = groups[i].second;
        half += runs('E', i == 0 ? (e + 1) / 2 : i + 1 == groups.size() ? (e - 1) / 2 : e / 2);
      }
      word = half + reversed(half);
    }
  } else {
    // k odd, l even
    if (empty) {
      word = runs('N', (k - 1) / 2) + runs('E', l / 2) + "N" + runs('E', l / 2) +
             runs('N', (k - 1) / 2);
    } else {
      std::string half;
      for (std::size_t i = 0; i < groups.size(); ++i) {
        int n = groups[i].first;
        half += runs('N', i == 0 ? (n - 1) / 2 : n / 2);
        int e = groups[i].second;
        half += runs('E', i == 0 ? (e + 1) / 2 : i + 1 == groups.size() ? (e - 1) / 2 : e / 2);
      }
      word = half + "N" + reversed(half);
    }
  }
  RectPartition image = partition_from_word(word, k, l);
  if (!image.self_complementary())
    throw std::logic_error("phi: image is not self-complementary");
  return image;
}

std::uint64_t ferrers_mask(const RectPartition& p) {
  std::uint64_t mask = 0;
  for (int i = 0; i < p.k; ++i)
    for (int j = 0; j < p.parts[i]; ++j) mask |= std::uint64_t(1) << (i * p.l + j);
  return mask;
}

RectComplex build_rect_complex(int k, int l) {
  RectComplex rc;
  rc.k = k;
  rc.l = l;
  rc.cells.assign(k * l + 1, {});
  for (const RectPartition& p : enumerate_rect_partitions(k, l)) rc.cells[p.rank()].push_back(p);

  rc.complex.labels.resize(k * l + 1);
  rc.complex.boundary.resize(k * l + 1);
  for (int i = 0; i <= k * l; ++i)
    for (const RectPartition& p : rc.cells[i]) rc.complex.labels[i].push_back(p.label());

  rc.complex.boundary[0] = F2Matrix(0, rc.cells[0].size());
  for (int i = 1; i <= k * l; ++i) {
    F2Matrix d(rc.cells[i - 1].size(), rc.cells[i].size());
    for (std::size_t col = 0; col < rc.cells[i].size(); ++col) {
      const RectPartition& p = rc.cells[i][col];
      for (int idx = 0; idx < k; ++idx) {
        if (p.parts[idx] < 1) continue;
        if (idx + 1 < k && p.parts[idx + 1] == p.parts[idx]) continue;
        if (rect_boundary_coefficient(p, idx) == 0) continue;
        RectPartition q = p;
        q.parts[idx] -= 1;
        auto at = std::lower_bound(rc.cells[i - 1].begin(), rc.cells[i - 1].end(), q);
        d.set(at - rc.cells[i - 1].begin(), col, true);
      }
    }
    rc.complex.boundary[i] = std::move(d);
  }
  rc.complex.validate();
  return rc;
}

SupportedComplex rect_supported_complex(const RectComplex& rc) {
  SupportedComplex sc;
  sc.chain = rc.complex;
  const auto& cells = rc.cells;
  sc.lower_lt_upper = [&cells](int rank, std::uint32_t lo, std::uint32_t hi) {
    const RectPartition& a = cells[rank - 1][lo];
    const RectPartition& b = cells[rank][hi];
    for (int i = 0; i < a.k; ++i)
      if (a.parts[i] > b.parts[i]) return false;
    return true;
  };
  return sc;
}

Matching rect_morse_matching(const RectComplex& rc) {
  Matching m;
  for (int i = 0; i + 1 < static_cast<int>(rc.cells.size()); ++i) {
    for (std::size_t lo = 0; lo < rc.cells[i].size(); ++lo) {
      auto mu = rect_matching(rc.cells[i][lo]);
      if (!mu || mu->rank() != i + 1) continue;
      auto at = std::lower_bound(rc.cells[i + 1].begin(), rc.cells[i + 1].end(), *mu);
      m.edges.push_back(MatchEdge{i + 1, static_cast<std::uint32_t>(at - rc.cells[i + 1].begin()),
                                  static_cast<std::uint32_t>(lo)});
    }
  }
  return m;
}

std::array<bool, 4> rect_orbit_crosscheck(const RectComplex& rc, const Limits& limits) {
  PermGroup g = parse_group("wreath:" + std::to_string(rc.k) + "," + std::to_string(rc.l));
  std::array<bool, 4> matched{};
  for (ComplexKind kind : kAllKinds) {
    GradedComplex oc = build_orbit_complex(g, kind, limits);
    bool ok = true;
    std::vector<std::vector<std::uint32_t>> relabel(rc.cells.size());
    for (std::size_t i = 0; i < rc.cells.size() && ok; ++i) {
      for (const RectPartition& p : rc.cells[i]) {
        std::string want = subset_label(orbit_canonical(g, ferrers_mask(p)));
        auto at = std::find(oc.labels[i].begin(), oc.labels[i].end(), want);
        if (at == oc.labels[i].end()) {
          ok = false;
          break;
        }
        relabel[i].push_back(static_cast<std::uint32_t>(at - oc.labels[i].begin()));
      }
    }
    for (std::size_t i = 1; i < rc.cells.size() && ok; ++i) {
      const F2Matrix& mine = rc.complex.boundary[i];
      const F2Matrix& theirs = oc.boundary[i];
      for (std::size_t r = 0; r < mine.rows() && ok; ++r)
        for (std::size_t c = 0; c < mine.cols(); ++c)
          if (mine.get(r, c) != theirs.get(relabel[i - 1][r], relabel[i][c])) {
            ok = false;
            break;
          }
    }
    matched[static_cast<int>(kind)] = ok;
  }
  return matched;
}

}  // namespace homcon
