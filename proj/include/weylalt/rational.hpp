#pragma once

// Exact rational scalars, vectors and small dense matrices.
//
// Everything here is backed by GMP: numerators and denominators are
// arbitrary precision and every value is kept in lowest terms with a
// positive denominator, so equality and hashing can work on the stored
// representation directly.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace weylalt {

class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpz_class& value) : q_(value) {}
  explicit Rational(mpq_class value);

  /// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// The integer value; throws std::domain_error unless is_integer() and
  /// the value fits in 64 bits.
  std::int64_t to_int64() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string str() const;
  std::size_t hash() const;

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Fixed-dimension vector of rationals. Used for weights and roots in
/// every coordinate system the library deals with.
class RationalVector {
 public:
  explicit RationalVector(std::size_t dim);
  RationalVector(std::initializer_list<Rational> coords);
  explicit RationalVector(std::vector<Rational> coords);

  static RationalVector unit(std::size_t dim, std::size_t index);
  static RationalVector from_ints(std::span<const std::int64_t> values);

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_integral() const;

  RationalVector& operator+=(const RationalVector& o);
  RationalVector& operator-=(const RationalVector& o);
  RationalVector& operator*=(const Rational& s);
  RationalVector operator-() const;

  friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
  friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
  friend RationalVector operator*(const Rational& s, RationalVector v) { return v *= s; }
  friend RationalVector operator*(RationalVector v, const Rational& s) { return v *= s; }

  friend bool operator==(const RationalVector& a, const RationalVector& b) = default;
  /// Lexicographic on coordinates; vectors of different dimension order by dim.
  friend std::strong_ordering operator<=>(const RationalVector& a, const RationalVector& b);

  /// "(a, b, c)" with each coordinate printed as p or p/q.
  std::string str() const;
  std::size_t hash() const;

 private:
  std::vector<Rational> coords_;
};

Rational dot(const RationalVector& a, const RationalVector& b);
std::ostream& operator<<(std::ostream& os, const RationalVector& v);

struct RationalVectorHash {
  std::size_t operator()(const RationalVector& v) const { return v.hash(); }
};

/// Dense row-major matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix identity(std::size_t n);
  /// Matrix whose j-th column is columns[j].
  static RationalMatrix from_columns(std::span<const RationalVector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  RationalVector column(std::size_t c) const;
  RationalMatrix transpose() const;
  Rational determinant() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalVector operator*(const RationalMatrix& a, const RationalVector& v);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

  std::size_t hash() const;
  std::string str() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

struct RationalMatrixHash {
  std::size_t operator()(const RationalMatrix& m) const { return m.hash(); }
};

/// Exact solution x of a x = b for a matrix of full column rank, using
/// fraction-free (Bareiss) elimination on an integer-scaled copy of the
/// augmented system. Overdetermined systems are accepted; nullopt means
/// the system is inconsistent. Throws std::invalid_argument when the
/// columns of a are linearly dependent or the shapes disagree.
std::optional<RationalVector> solve_exact(const RationalMatrix& a, const RationalVector& b);

/// Inverse of a square nonsingular matrix; throws std::domain_error if singular.
RationalMatrix inverse(const RationalMatrix& a);

}  // namespace weylalt

template <>
struct std::hash<weylalt::Rational> {
  std::size_t operator()(const weylalt::Rational& r) const { return r.hash(); }
};
