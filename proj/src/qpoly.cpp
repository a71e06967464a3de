#include "homcon/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace homcon {

QPolynomial::QPolynomial(BigInt constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

QPolynomial QPolynomial::monomial(BigInt c, std::size_t exponent) {
  QPolynomial p;
  if (c != 0) {
    p.c_.assign(exponent + 1, BigInt(0));
    p.c_[exponent] = std::move(c);
  }
  return p;
}

void QPolynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPolynomial QPolynomial::operator+(const QPolynomial& rhs) const {
  std::vector<BigInt> out(std::max(c_.size(), rhs.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) out[i] += rhs.c_[i];
  return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::operator-(const QPolynomial& rhs) const {
  std::vector<BigInt> out(std::max(c_.size(), rhs.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) out[i] -= rhs.c_[i];
  return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::operator*(const QPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> out(c_.size() + rhs.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
  }
  return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::divide_exact(const QPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::logic_error("QPolynomial: division by zero polynomial");
  if (is_zero()) return {};
  if (degree() < divisor.degree())
    throw std::logic_error("QPolynomial: inexact division (degree of dividend too small)");
  std::vector<BigInt> rem = c_;
  std::size_t dd = divisor.c_.size() - 1;
  const BigInt& lead = divisor.c_[dd];
  std::vector<BigInt> quot(c_.size() - dd, BigInt(0));
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) continue;
    if (rem[i] % lead != 0)
      throw std::logic_error("QPolynomial: inexact division (non-integral quotient)");
    BigInt f = rem[i] / lead;
    quot[i - dd] = f;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= f * divisor.c_[j];
  }
  for (const BigInt& r : rem)
    if (r != 0) throw std::logic_error("QPolynomial: inexact division (nonzero remainder)");
  return QPolynomial(std::move(quot));
}

BigInt QPolynomial::eval(const BigInt& q) const {
  BigInt acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + c_[i];
  return acc;
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    BigInt a = c_[i];
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (i == 0 || a != 1) os << a.str();
    if (i == 1)
      os << "q";
    else if (i > 1)
      os << "q^" << i;
  }
  return os.str();
}

namespace {

// 1 - q^e
QPolynomial one_minus_qpow(std::size_t e) {
  std::vector<BigInt> c(e + 1, BigInt(0));
  c[0] = 1;
  c[e] -= 1;
  return QPolynomial(std::move(c));
}

QPolynomial pow_poly(const QPolynomial& base, int e) {
  QPolynomial acc = QPolynomial::one();
  for (int i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

int euler_phi(int d) {
  int result = d, m = d;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace

QPolynomial q_binomial(int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("q_binomial: negative argument");
  QPolynomial num = QPolynomial::one();
  for (int i = 1; i <= k; ++i) num = num * one_minus_qpow(l + i);
  for (int i = 1; i <= k; ++i) num = num.divide_exact(one_minus_qpow(i));
  return num;
}

QPolynomial macmahon(int r, int c, int t) {
  if (r < 0 || c < 0 || t < 0) throw std::invalid_argument("macmahon: negative argument");
  QPolynomial num = QPolynomial::one();
  QPolynomial den = QPolynomial::one();
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= c; ++j) {
      num = num * one_minus_qpow(r + t + j - i);
      den = den * one_minus_qpow(r + c - j - i + 1);
    }
  return num.divide_exact(den);
}

QPolynomial cyclic_orbit_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_orbit_polynomial: n must be >= 1");
  std::vector<BigInt> sum(n + 1, BigInt(0));
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    std::vector<BigInt> base(d + 1, BigInt(0));
    base[0] = 1;
    base[d] = 1;
    QPolynomial term = pow_poly(QPolynomial(base), n / d);
    BigInt phi = euler_phi(d);
    for (int i = 0; i <= term.degree(); ++i) sum[i] += phi * term.coeff(i);
  }
  for (BigInt& s : sum) {
    if (s % n != 0)
      throw std::logic_error("cyclic_orbit_polynomial: coefficient sum not divisible by n");
    s /= n;
  }
  return QPolynomial(std::move(sum));
}

BigInt cyclic_self_complementary_closed_form(int n) {
  if (n <= 2) throw std::invalid_argument("closed form stated only for n > 2");
  BigInt sum = 0;
  for (int d = 2; d <= n; d += 2) {
    if (n % d != 0) continue;
    BigInt pw = 1;
    pw <<= (n / d);
    sum += euler_phi(d) * pw;
  }
  if (sum % n != 0)
    throw std::logic_error("cyclic_self_complementary_closed_form: sum not divisible by n");
  return sum / n;
}

bool is_symmetric_unimodal(const QPolynomial& p) {
  const auto& c = p.coeffs();
  std::size_t len = c.size();
  for (std::size_t i = 0; i < len / 2; ++i)
    if (c[i] != c[len - 1 - i]) return false;
  bool falling = false;
  for (std::size_t i = 0; i + 1 < len; ++i) {
    if (c[i + 1] < c[i]) falling = true;
    else if (c[i + 1] > c[i] && falling) return false;
  }
  return true;
}

}  // namespace homcon
