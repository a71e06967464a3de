#include "homcon/permgroup.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace homcon {

Permutation::Permutation(int n) : img_(n) {
  for (int i = 0; i < n; ++i) img_[i] = i;
}

Permutation::Permutation(std::vector<int> image) : img_(std::move(image)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= n() || seen[v])
      throw std::invalid_argument("Permutation: image table is not a bijection");
    seen[v] = true;
  }
}

std::uint64_t Permutation::apply_mask(std::uint64_t mask) const {
  std::uint64_t out = 0;
  while (mask) {
    int b = std::countr_zero(mask);
    mask &= mask - 1;
    out |= std::uint64_t(1) << img_[b];
  }
  return out;
}

Permutation Permutation::compose(const Permutation& inner) const {
  std::vector<int> out(img_.size());
  for (int i = 0; i < n(); ++i) out[i] = img_[inner.img_[i]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(img_.size());
  for (int i = 0; i < n(); ++i) out[img_[i]] = i;
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (int i = 0; i < n(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(j);
      j = img_[j];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> Permutation::cycle_lengths() const {
  std::vector<int> out;
  std::vector<bool> seen(img_.size(), false);
  for (int i = 0; i < n(); ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      ++len;
      j = img_[j];
    }
    out.push_back(len);
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  auto cycs = cycles();
  if (cycs.empty()) return "(1)";
  std::ostringstream os;
  for (const auto& cyc : cycs) {
    os << "(";
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) os << " ";
      os << cyc[i] + 1;
    }
    os << ")";
  }
  return os.str();
}

namespace {

constexpr int kMaxGroundSet = 63;  // subsets live in one 64-bit word

class SpecParser {
public:
  explicit SpecParser(const std::string& s) : s_(s) {}

  PermGroup parse() {
    PermGroup g;
    std::string head = take_until(':');
    if (head == "cyclic") {
      expect(':');
      g.n = take_int();
      end();
      check_n(g.n);
      g.kind = PermGroup::Kind::Cyclic;
      g.param1 = g.n;
      std::vector<int> img(g.n);
      for (int i = 0; i < g.n; ++i) img[i] = (i + 1) % g.n;
      g.generators.push_back(Permutation(std::move(img)));
    } else if (head == "symmetric") {
      expect(':');
      g.n = take_int();
      end();
      check_n(g.n);
      g.kind = PermGroup::Kind::Symmetric;
      g.param1 = g.n;
      if (g.n >= 2) {
        std::vector<int> swap01(g.n);
        for (int i = 0; i < g.n; ++i) swap01[i] = i;
        swap01[0] = 1;
        swap01[1] = 0;
        g.generators.push_back(Permutation(std::move(swap01)));
        if (g.n > 2) {
          std::vector<int> cyc(g.n);
          for (int i = 0; i < g.n; ++i) cyc[i] = (i + 1) % g.n;
          g.generators.push_back(Permutation(std::move(cyc)));
        }
      }
    } else if (head == "wreath") {
      expect(':');
      int k = take_int();
      expect(',');
      int l = take_int();
      end();
      if (k < 1 || l < 1) fail("wreath parameters must be >= 1");
      check_n(k * l);
      g.n = k * l;
      g.kind = PermGroup::Kind::Wreath;
      g.param1 = k;
      g.param2 = l;
      g.generators = wreath_generators(k, l);
    } else if (head == "gens") {
      expect(':');
      g.n = take_int();
      expect(':');
      check_n(g.n);
      g.kind = PermGroup::Kind::Explicit;
      for (;;) {
        g.generators.push_back(parse_generator(g.n));
        skip_spaces();
        if (pos_ == s_.size()) break;
        expect(',');
      }
    } else {
      fail("unknown group kind '" + head + "'");
    }
    return g;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void check_n(int n) const {
    if (n < 1) fail("ground-set size must be >= 1");
    if (n > kMaxGroundSet) fail("ground-set size exceeds hard cap 63");
  }

  void skip_spaces() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }

  std::string take_until(char stop) {
    std::size_t at = s_.find(stop, pos_);
    if (at == std::string::npos) fail("expected '" + std::string(1, stop) + "'");
    std::string out = s_.substr(pos_, at - pos_);
    pos_ = at;
    return out;
  }

  void expect(char c) {
    skip_spaces();
    if (pos_ >= s_.size() || s_[pos_] != c) fail("expected '" + std::string(1, c) + "'");
    ++pos_;
  }

  int take_int() {
    skip_spaces();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    if (pos_ - start > 9) fail("integer too large");
    return std::stoi(s_.substr(start, pos_ - start));
  }

  void end() {
    skip_spaces();
    if (pos_ != s_.size()) fail("trailing characters after group spec");
  }

  // One generator: a nonempty product of disjoint cycles.
  Permutation parse_generator(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    std::vector<bool> used(n, false);
    skip_spaces();
    if (pos_ >= s_.size() || s_[pos_] != '(') fail("expected '(' starting a cycle");
    while (pos_ < s_.size() && (s_[pos_] == '(' || s_[pos_] == ' ')) {
      skip_spaces();
      if (pos_ >= s_.size() || s_[pos_] != '(') break;
      ++pos_;
      std::vector<int> cyc;
      for (;;) {
        int p = take_int();
        if (p < 1 || p > n) fail("point " + std::to_string(p) + " outside 1.." + std::to_string(n));
        if (used[p - 1]) fail("point " + std::to_string(p) + " repeated within a generator");
        used[p - 1] = true;
        cyc.push_back(p - 1);
        if (pos_ < s_.size() && s_[pos_] == ' ') {
          skip_spaces();
          if (pos_ < s_.size() && s_[pos_] == ')') break;
          continue;
        }
        break;
      }
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')' closing a cycle");
      ++pos_;
      for (std::size_t i = 0; i < cyc.size(); ++i) img[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
    return Permutation(std::move(img));
  }

  // Row stabilizer of the k x l box partition, boxes numbered row-major:
  // the within-row symmetric group on row 1 plus wholesale row moves.
  static std::vector<Permutation> wreath_generators(int k, int l) {
    int n = k * l;
    std::vector<Permutation> gens;
    auto ident = [&] {
      std::vector<int> img(n);
      for (int i = 0; i < n; ++i) img[i] = i;
      return img;
    };
    if (l >= 2) {
      auto img = ident();
      img[0] = 1;
      img[1] = 0;
      gens.push_back(Permutation(std::move(img)));
      if (l > 2) {
        auto cyc = ident();
        for (int j = 0; j < l; ++j) cyc[j] = (j + 1) % l;
        gens.push_back(Permutation(std::move(cyc)));
      }
    }
    if (k >= 2) {
      auto img = ident();
      for (int j = 0; j < l; ++j) {
        img[j] = l + j;
        img[l + j] = j;
      }
      gens.push_back(Permutation(std::move(img)));
      if (k > 2) {
        auto cyc = ident();
        for (int r = 0; r < k; ++r)
          for (int j = 0; j < l; ++j) cyc[r * l + j] = ((r + 1) % k) * l + j;
        gens.push_back(Permutation(std::move(cyc)));
      }
    }
    if (gens.empty()) gens.push_back(Permutation(n));  // k = l = 1
    return gens;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

PermGroup parse_group(const std::string& spec) { return SpecParser(spec).parse(); }

std::string format_group(const PermGroup& g) {
  switch (g.kind) {
    case PermGroup::Kind::Cyclic:
      return "cyclic:" + std::to_string(g.param1);
    case PermGroup::Kind::Symmetric:
      return "symmetric:" + std::to_string(g.param1);
    case PermGroup::Kind::Wreath:
      return "wreath:" + std::to_string(g.param1) + "," + std::to_string(g.param2);
    case PermGroup::Kind::Explicit: {
      std::ostringstream os;
      os << "gens:" << g.n << ":";
      for (std::size_t i = 0; i < g.generators.size(); ++i) {
        if (i) os << ",";
        os << g.generators[i].to_cycle_string();
      }
      return os.str();
    }
  }
  return {};
}

std::vector<SubsetOrbit> subset_orbits(const PermGroup& g, const Limits& limits) {
  if (g.n > limits.sweep_n)
    throw LimitError("subset sweep needs 2^" + std::to_string(g.n) +
                     " masks, above the configured cap of n <= " +
                     std::to_string(limits.sweep_n));
  const std::uint64_t total = std::uint64_t(1) << g.n;
  const std::uint64_t full = total - 1;
  std::vector<std::uint64_t> visited((total + 63) >> 6, 0);
  auto seen = [&](std::uint64_t m) { return (visited[m >> 6] >> (m & 63)) & 1u; };
  auto mark = [&](std::uint64_t m) { visited[m >> 6] |= std::uint64_t(1) << (m & 63); };

  std::vector<SubsetOrbit> out;
  std::vector<std::uint64_t> stack;
  for (std::uint64_t m = 0; m < total; ++m) {
    if (seen(m)) continue;
    // ascending sweep: m is the least member, hence the canonical mask
    SubsetOrbit orb;
    orb.canonical = m;
    orb.member_size = std::popcount(m);
    orb.complement_canonical = full;
    stack.clear();
    stack.push_back(m);
    mark(m);
    std::uint64_t size = 0;
    while (!stack.empty()) {
      std::uint64_t cur = stack.back();
      stack.pop_back();
      ++size;
      orb.complement_canonical = std::min(orb.complement_canonical, full & ~cur);
      for (const Permutation& gen : g.generators) {
        std::uint64_t nx = gen.apply_mask(cur);
        if (!seen(nx)) {
          mark(nx);
          stack.push_back(nx);
        }
      }
    }
    orb.orbit_size = size;
    out.push_back(orb);
  }
  return out;
}

int self_complementary_orbit_count(const PermGroup& g, const Limits& limits) {
  int count = 0;
  for (const SubsetOrbit& orb : subset_orbits(g, limits))
    if (orb.self_complementary()) ++count;
  return count;
}

QPolynomial orbit_polynomial(const std::vector<SubsetOrbit>& orbits, int n) {
  std::vector<BigInt> c(n + 1, BigInt(0));
  for (const SubsetOrbit& orb : orbits) c[orb.member_size] += 1;
  return QPolynomial(std::move(c));
}

QPolynomial orbit_polynomial(const PermGroup& g, const Limits& limits) {
  return orbit_polynomial(subset_orbits(g, limits), g.n);
}

std::vector<std::vector<int>> point_orbits(const PermGroup& g) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(g.n, false);
  for (int i = 0; i < g.n; ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit, stack{i};
    seen[i] = true;
    while (!stack.empty()) {
      int p = stack.back();
      stack.pop_back();
      orbit.push_back(p);
      for (const Permutation& gen : g.generators) {
        int q = gen(p);
        if (!seen[q]) {
          seen[q] = true;
          stack.push_back(q);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool has_odd_orbit(const PermGroup& g) {
  for (const auto& orbit : point_orbits(g))
    if (orbit.size() % 2 == 1) return true;
  return false;
}

bool is_transitive(const PermGroup& g) { return point_orbits(g).size() == 1; }

namespace {

struct ImageHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b9;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

std::vector<Permutation> group_elements(const PermGroup& g, const Limits& limits) {
  std::unordered_set<std::vector<int>, ImageHash> seen;
  std::vector<Permutation> elements{Permutation(g.n)};
  seen.insert(elements[0].image());
  for (std::size_t head = 0; head < elements.size(); ++head) {
    Permutation cur = elements[head];  // copy: elements may reallocate
    for (const Permutation& gen : g.generators) {
      Permutation nx = gen.compose(cur);
      if (seen.insert(nx.image()).second) {
        elements.push_back(std::move(nx));
        if (elements.size() > limits.group_order)
          throw LimitError("group closure exceeds " + std::to_string(limits.group_order) +
                           " elements");
      }
    }
  }
  return elements;
}

std::uint64_t group_order(const PermGroup& g, const Limits& limits) {
  return group_elements(g, limits).size();
}

bool has_two_power_derangement(const PermGroup& g, const Limits& limits) {
  for (const Permutation& p : group_elements(g, limits)) {
    if (p.is_identity()) continue;
    bool ok = true;
    for (int len : p.cycle_lengths()) {
      if (len < 2 || !std::has_single_bit(static_cast<unsigned>(len))) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

std::uint64_t orbit_canonical(const PermGroup& g, std::uint64_t mask) {
  std::vector<std::uint64_t> stack{mask};
  std::unordered_set<std::uint64_t> seen{mask};
  std::uint64_t best = mask;
  while (!stack.empty()) {
    std::uint64_t cur = stack.back();
    stack.pop_back();
    best = std::min(best, cur);
    for (const Permutation& gen : g.generators) {
      std::uint64_t nx = gen.apply_mask(cur);
      if (seen.insert(nx).second) stack.push_back(nx);
    }
  }
  return best;
}

std::string subset_label(std::uint64_t mask) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  while (mask) {
    int b = std::countr_zero(mask);
    mask &= mask - 1;
    if (!first) os << ",";
    first = false;
    os << b + 1;
  }
  os << "}";
  return os.str();
}

}  // namespace homcon
