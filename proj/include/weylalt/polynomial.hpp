#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace weylalt {

/// Polynomial in q with arbitrary-precision integer coefficients, stored
/// densely by power with no trailing zeros (the zero polynomial is empty).
///
/// Values of the q-partition function only ever have nonnegative
/// coefficients; q-multiplicities are alternating sums and may not.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<mpz_class> coeffs);

  static QPolynomial constant(long c);
  /// c q^degree
  static QPolynomial monomial(std::size_t degree, long c = 1);
  /// (1 + q)^n
  static QPolynomial one_plus_q_power(std::size_t n);

  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  mpz_class coefficient(std::size_t power) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool has_nonnegative_coefficients() const;

  mpz_class evaluate(const mpz_class& q) const;
  mpz_class at_one() const;

  /// Multiplies by q^k.
  QPolynomial shifted(std::size_t k) const;
  /// Adds c * q^k * other in place.
  void add_shifted(const QPolynomial& other, std::size_t k, long c = 1);

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial& operator*=(const QPolynomial& o);
  QPolynomial operator-() const;
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Descending powers: "q^2 + q", "2q^3 - 1", "0".
  std::string str() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const QPolynomial& p);

}  // namespace weylalt
