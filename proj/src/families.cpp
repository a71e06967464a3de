#include "homcon/families.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "homcon/orbit_complex.hpp"

namespace homcon {

namespace {

QPolynomial poincare_polynomial(const std::vector<std::size_t>& h) {
  std::vector<BigInt> c(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) c[i] = h[i];
  return QPolynomial(std::move(c));
}

std::vector<std::size_t> cyclic_homology(int n, const Limits& limits) {
  return homology_ranks(
      build_orbit_complex(parse_group("cyclic:" + std::to_string(n)), ComplexKind::InvariantsD,
                          limits));
}

// --- polynomials over GF(2), bit i = coefficient of x^i ---------------------

int poly_degree(std::uint64_t p) { return 63 - std::countl_zero(p); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  int dm = poly_degree(m);
  while (a && poly_degree(a) >= dm) a ^= m << (poly_degree(a) - dm);
  return a;
}

std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t acc = 0;
  while (b) {
    if (b & 1) acc ^= a;
    b >>= 1;
    a = poly_mod(a << 1, m);
  }
  return acc;
}

// x^e mod m by square and multiply
std::uint64_t poly_xpow_mod(std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = poly_mod(1, m);
  std::uint64_t base = poly_mod(2, m);  // x
  while (e) {
    if (e & 1) result = poly_mulmod(result, base, m);
    base = poly_mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

bool poly_irreducible(std::uint64_t p) {
  int d = poly_degree(p);
  if (d <= 0) return false;
  if (!(p & 1)) return false;  // divisible by x
  for (int e = 1; 2 * e <= d; ++e)
    for (std::uint64_t q = (std::uint64_t(1) << e) | 1; q < (std::uint64_t(2) << e); q += 2)
      if (poly_degree(q) == e && poly_mod(p, q) == 0) return false;
  return true;
}

}  // namespace

NecklaceReport necklace_report(int n, bool check_conjecture, const Limits& limits) {
  if (n < 1) throw std::invalid_argument("necklace_report: n must be >= 1");
  NecklaceReport rep;
  rep.n = n;
  rep.homology = cyclic_homology(n, limits);
  rep.orbit_polynomial = cyclic_orbit_polynomial(n);

  if (!check_conjecture || n % 2 != 0) return rep;
  rep.conjecture_checked = true;

  for (std::size_t i = 1; i < rep.homology.size(); i += 2)
    if (rep.homology[i] != 0) {
      rep.conjecture_holds = false;
      rep.conjecture_note = "odd-index homology rank H_" + std::to_string(i) + " is nonzero";
      return rep;
    }

  int m = n / 2;
  QPolynomial a_m = poincare_polynomial(cyclic_homology(m, limits));
  QPolynomial x_m = cyclic_orbit_polynomial(m);
  QPolynomial q(std::vector<BigInt>{0, 1});
  QPolynomial one_plus_q(std::vector<BigInt>{1, 1});
  QPolynomial numerator = q * a_m + x_m;
  QPolynomial rhs;
  try {
    rhs = numerator.divide_exact(one_plus_q);
  } catch (const std::logic_error&) {
    rep.conjecture_holds = false;
    rep.conjecture_note = "q*A_m + X_m is not divisible by 1+q";
    return rep;
  }
  // A_n has only even exponents here; compare its q^(1/2) reindexing
  std::vector<BigInt> halved(rep.homology.size() / 2 + 1, BigInt(0));
  for (std::size_t i = 0; i < rep.homology.size(); i += 2) halved[i / 2] = rep.homology[i];
  if (QPolynomial(std::move(halved)) == rhs) {
    rep.conjecture_holds = true;
  } else {
    rep.conjecture_holds = false;
    rep.conjecture_note = "recursion mismatch: (q*A_m + X_m)/(1+q) = " + rhs.to_string();
  }
  return rep;
}

IsbellGroup isbell_group(int b, const Limits& limits) {
  if (b <= 1 || b % 2 == 0)
    throw std::invalid_argument("isbell_group: b must be an odd integer > 1");
  IsbellGroup ig;
  ig.b = b;

  // minimal d with b | 2^d - 1 (exists since b is odd)
  int d = 1;
  for (std::uint64_t pw = 2;; ++d, pw = (pw * 2) % b) {
    if (pw % b == 1) break;
    if (d > 40) throw std::logic_error("isbell_group: multiplicative order not found");
  }
  ig.d = d;
  if (2 * b > limits.sweep_n)
    throw LimitError("isbell group on " + std::to_string(2 * b) +
                     " points is above the configured cap of n <= " +
                     std::to_string(limits.sweep_n));

  // lexicographically least monic irreducible degree-d divisor of x^b - 1
  // whose roots have multiplicative order exactly b
  std::uint64_t chosen = 0;
  for (std::uint64_t p = std::uint64_t(1) << d; p < (std::uint64_t(2) << d) && !chosen; ++p) {
    if (!poly_irreducible(p)) continue;
    if (poly_xpow_mod(b, p) != 1) continue;  // p must divide x^b - 1
    bool full_order = true;
    for (int e = 1; e < b && full_order; ++e)
      if (b % e == 0 && poly_xpow_mod(e, p) == 1) full_order = false;
    if (full_order) chosen = p;
  }
  if (!chosen) throw std::logic_error("isbell_group: no suitable irreducible factor");
  ig.factor = chosen;

  // companion matrix on row vectors over V = GF(2)^d: e_i -> e_{i+1},
  // e_d -> sum alpha_i e_i with char poly x^d + sum alpha_i x^{i-1}
  std::uint64_t alpha = chosen & ((std::uint64_t(1) << d) - 1);
  if (std::popcount(alpha) % 2 != 0)
    throw std::logic_error("isbell_group: coefficient sum of the factor is odd");
  auto apply_c = [&](std::uint64_t v) {
    std::uint64_t out = (v << 1) & ((std::uint64_t(1) << d) - 1);
    if (v >> (d - 1)) out ^= alpha;
    return out;
  };

  // f_j(w) = parity of w * c^{-j}; tabulated as masks: f_j(w) = parity(w & fmask[j])
  // via f_j(e_i) = f(e_i c^{-j})
  std::vector<std::uint64_t> fmask(b, 0);
  {
    // c^{-1}: invert by applying c b-1 times
    std::vector<std::uint64_t> basis_pow(d);
    for (int i = 0; i < d; ++i) basis_pow[i] = std::uint64_t(1) << i;
    for (int j = 0; j < b; ++j) {
      for (int i = 0; i < d; ++i)
        if (std::popcount(basis_pow[i]) & 1) fmask[j] |= std::uint64_t(1) << i;
      for (int i = 0; i < d; ++i) {  // advance to c^{-(j+1)}: apply c^{b-1}
        std::uint64_t v = basis_pow[i];
        for (int step = 0; step < b - 1; ++step) v = apply_c(v);
        basis_pow[i] = v;
      }
    }
  }

  // points are cosets labelled (j, eps), eps = f_j(translation part), numbered
  // 2j + eps with H itself at index 0; the generators act as
  //   c-part:   (j, eps) -> (j+1 mod b, eps)
  //   e_1-part: (j, eps) -> (j, eps + f_j(e_1))
  int npoints = 2 * b;
  std::vector<int> gen_c(npoints), gen_t(npoints);
  for (int j = 0; j < b; ++j)
    for (int eps = 0; eps < 2; ++eps) {
      gen_c[2 * j + eps] = 2 * ((j + 1) % b) + eps;
      int flip = std::popcount(std::uint64_t(1) & fmask[j]) & 1;  // f_j(e_1)
      gen_t[2 * j + eps] = 2 * j + (eps ^ flip);
    }
  ig.group.n = npoints;
  ig.group.kind = PermGroup::Kind::Explicit;
  ig.group.generators.push_back(Permutation(std::move(gen_c)));
  ig.group.generators.push_back(Permutation(std::move(gen_t)));

  std::ostringstream os;
  os << "b=" << b << " d=" << d;
  ig.trace.push_back(os.str());
  os.str("");
  os << "factor bits=0x" << std::hex << chosen << std::dec << " (x^" << d;
  for (int i = d - 1; i >= 0; --i)
    if ((chosen >> i) & 1) os << (i ? " + x^" + std::to_string(i) : " + 1");
  os << ")";
  ig.trace.push_back(os.str());
  ig.trace.push_back("generators: " + ig.group.generators[0].to_cycle_string() + " , " +
                     ig.group.generators[1].to_cycle_string());

  if (!is_transitive(ig.group))
    throw std::logic_error("isbell_group: constructed action is not transitive");
  std::uint64_t want_order = std::uint64_t(b) << d;
  if (group_order(ig.group, limits) != want_order)
    throw std::logic_error("isbell_group: constructed group has wrong order");
  return ig;
}

ConcentrationReport concentration_failure_check(const PermGroup& g, const Limits& limits) {
  ConcentrationReport rep;
  rep.homology = homology_ranks(build_orbit_complex(g, ComplexKind::InvariantsD, limits));
  for (std::size_t i = 1; i < rep.homology.size(); i += 2)
    if (rep.homology[i] != 0) rep.odd_rank_nonzero = true;
  return rep;
}

}  // namespace homcon
