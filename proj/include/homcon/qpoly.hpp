#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace homcon {

using BigInt = boost::multiprecision::cpp_int;

// Exact integer-coefficient polynomial in q. Canonical form: no trailing zero
// coefficient; the zero polynomial has an empty coefficient vector.
class QPolynomial {
public:
  QPolynomial() = default;
  explicit QPolynomial(BigInt constant);
  explicit QPolynomial(std::vector<BigInt> coeffs);
  static QPolynomial monomial(BigInt c, std::size_t exponent);
  static QPolynomial one() { return QPolynomial(BigInt(1)); }

  bool is_zero() const { return c_.empty(); }
  // Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  const std::vector<BigInt>& coeffs() const { return c_; }

  QPolynomial operator+(const QPolynomial& rhs) const;
  QPolynomial operator-(const QPolynomial& rhs) const;
  QPolynomial operator*(const QPolynomial& rhs) const;
  bool operator==(const QPolynomial& rhs) const { return c_ == rhs.c_; }

  // Exact quotient; throws std::logic_error if the division leaves a
  // remainder (exactness is a theorem wherever this is called, so a nonzero
  // remainder signals an implementation bug, not bad input).
  QPolynomial divide_exact(const QPolynomial& divisor) const;

  BigInt eval(const BigInt& q) const;
  BigInt at_one() const { return eval(1); }
  BigInt at_minus_one() const { return eval(-1); }

  // "1 + q + 2q^2" style rendering.
  std::string to_string() const;

private:
  void normalize();
  std::vector<BigInt> c_;
};

// Gaussian binomial [k+l choose k]_q: rank generating function of partitions
// fitting in a k x l rectangle. Degree k*l, positive coefficients.
QPolynomial q_binomial(int k, int l);

// Volume generating function of plane partitions in an r x c x t box,
// prod_{i<=r} prod_{j<=c} (1 - q^{r+t+j-i}) / (1 - q^{r+c-j-i+1}),
// computed by exact polynomial division.
QPolynomial macmahon(int r, int c, int t);

// Orbit-size generating function X(C_n, q) = (1/n) sum_{d|n} phi(d) (1+q^d)^{n/d}
// for the cyclic group generated by an n-cycle; the division by n is checked
// coefficientwise and throws std::logic_error if inexact.
QPolynomial cyclic_orbit_polynomial(int n);

// Closed form (1/n) sum_{d|n, d even} phi(d) 2^{n/d} for the number of
// self-complementary necklace orbits; valid for n > 2.
BigInt cyclic_self_complementary_closed_form(int n);

// True iff the coefficient sequence is palindromic and weakly rises then
// weakly falls.
bool is_symmetric_unimodal(const QPolynomial& p);

}  // namespace homcon
