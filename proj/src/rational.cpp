#include "weylalt/rational.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "weylalt/errors.hpp"

namespace weylalt {
namespace {

std::size_t hash_mpz(const mpz_class& z) {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1);
  const std::size_t limbs = mpz_size(z.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), static_cast<mp_size_t>(i))) +
         0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

bool parse_digits(std::string_view s, mpz_class& out) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return false;
  out.set_str(std::string(s), 10);
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class value) : q_(std::move(value)) {
  if (q_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  mpz_class num;
  mpz_class den = 1;
  const auto slash = s.find('/');
  if (!parse_digits(s.substr(0, slash), num))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  if (slash != std::string_view::npos) {
    if (!parse_digits(s.substr(slash + 1), den))
      throw ParseError("malformed rational '" + std::string(text) + "'");
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw std::domain_error("rational " + str() + " is not an integer");
  const mpz_class& n = q_.get_num();
  if (!mpz_fits_slong_p(n.get_mpz_t())) throw std::domain_error("integer " + str() + " overflows");
  return n.get_si();
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const { return q_.get_str(); }

std::size_t Rational::hash() const {
  return mix(hash_mpz(q_.get_num()), hash_mpz(q_.get_den()));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// --- RationalVector -------------------------------------------------------

RationalVector::RationalVector(std::size_t dim) : coords_(dim) {
  if (dim == 0) throw std::invalid_argument("vector dimension must be positive");
}

RationalVector::RationalVector(std::initializer_list<Rational> coords) : coords_(coords) {
  if (coords_.empty()) throw std::invalid_argument("vector dimension must be positive");
}

RationalVector::RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("vector dimension must be positive");
}

RationalVector RationalVector::unit(std::size_t dim, std::size_t index) {
  RationalVector v(dim);
  v[index] = 1;
  return v;
}

RationalVector RationalVector::from_ints(std::span<const std::int64_t> values) {
  RationalVector v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) v[i] = Rational(static_cast<long>(values[i]));
  return v;
}

bool RationalVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool RationalVector::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& r) { return r.is_integer(); });
}

RationalVector& RationalVector::operator+=(const RationalVector& o) {
  if (o.dim() != dim()) throw std::invalid_argument("vector dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& o) {
  if (o.dim() != dim()) throw std::invalid_argument("vector dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

RationalVector RationalVector::operator-() const {
  RationalVector r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

std::strong_ordering operator<=>(const RationalVector& a, const RationalVector& b) {
  if (a.dim() != b.dim()) return a.dim() <=> b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string RationalVector::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += coords_[i].str();
  }
  return out + ")";
}

std::size_t RationalVector::hash() const {
  std::size_t h = coords_.size();
  for (const auto& c : coords_) h = mix(h, c.hash());
  return h;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("vector dimension mismatch");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i].value() * b[i].value();
  return Rational(std::move(acc));
}

std::ostream& operator<<(std::ostream& os, const RationalVector& v) { return os << v.str(); }

// --- RationalMatrix -------------------------------------------------------

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(std::span<const RationalVector> columns) {
  if (columns.empty()) throw std::invalid_argument("matrix needs at least one column");
  RationalMatrix m(columns.front().dim(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].dim() != m.rows_) throw std::invalid_argument("ragged columns");
    for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      mpq_class acc = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) acc += a(i, k).value() * b(k, j).value();
      }
      out(i, j) = Rational(std::move(acc));
    }
  }
  return out;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& v) {
  if (a.cols_ != v.dim()) throw std::invalid_argument("matrix/vector shape mismatch");
  RationalVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    mpq_class acc = 0;
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a(i, k).is_zero()) acc += a(i, k).value() * v[k].value();
    }
    out[i] = Rational(std::move(acc));
  }
  return out;
}

std::size_t RationalMatrix::hash() const {
  std::size_t h = mix(rows_, cols_);
  for (const auto& x : data_) h = mix(h, x.hash());
  return h;
}

std::string RationalMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
  }
  os << "]";
  return os.str();
}

namespace {

// Rows of the matrix scaled to integers by the lcm of their denominators.
std::vector<std::vector<mpz_class>> integer_rows(const RationalMatrix& a,
                                                 const RationalVector* rhs) {
  std::vector<std::vector<mpz_class>> rows(a.rows());
  const std::size_t width = a.cols() + (rhs ? 1 : 0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    mpz_class scale = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
                                                       a(r, c).value().get_den_mpz_t());
    if (rhs) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), (*rhs)[r].value().get_den_mpz_t());
    rows[r].resize(width);
    for (std::size_t c = 0; c < a.cols(); ++c) {
      rows[r][c] = a(r, c).numerator() * (scale / a(r, c).denominator());
    }
    if (rhs) rows[r][a.cols()] = (*rhs)[r].numerator() * (scale / (*rhs)[r].denominator());
  }
  return rows;
}

// In-place Bareiss elimination over the first `pivot_cols` columns.
// Returns the pivot column of each pivot row (in order). Row swaps are
// counted in `swaps`.
std::vector<std::size_t> bareiss(std::vector<std::vector<mpz_class>>& m, std::size_t pivot_cols,
                                 int& swaps) {
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t row = 0;
  swaps = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    if (p != row) {
      std::swap(m[p], m[row]);
      ++swaps;
    }
    for (std::size_t i = row + 1; i < m.size(); ++i) {
      for (std::size_t j = col + 1; j < m[i].size(); ++j) {
        m[i][j] = (m[row][col] * m[i][j] - m[i][col] * m[row][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[row][col];
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Rational RationalMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  std::vector<mpz_class> scales(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      mpz_lcm(scales[r].get_mpz_t(), scales[r].get_mpz_t(),
              (*this)(r, c).value().get_den_mpz_t());
  auto m = integer_rows(*this, nullptr);
  int swaps = 0;
  const auto pivots = bareiss(m, cols_, swaps);
  if (pivots.size() < rows_) return Rational(0);
  mpz_class denom = 1;
  for (const auto& s : scales) denom *= s;
  mpz_class det = m[rows_ - 1][cols_ - 1];
  if (swaps % 2) det = -det;
  return Rational(det, denom);
}

std::optional<RationalVector> solve_exact(const RationalMatrix& a, const RationalVector& b) {
  if (a.rows() != b.dim()) throw std::invalid_argument("solve: shape mismatch");
  const std::size_t n = a.cols();
  auto m = integer_rows(a, &b);
  int swaps = 0;
  const auto pivots = bareiss(m, n, swaps);
  if (pivots.size() < n) throw std::invalid_argument("solve: columns are linearly dependent");
  for (std::size_t r = n; r < m.size(); ++r) {
    if (m[r][n] != 0) return std::nullopt;
  }
  // pivots are 0..n-1 in order because the column rank is full.
  std::vector<mpq_class> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    mpq_class acc = m[ii][n];
    for (std::size_t j = ii + 1; j < n; ++j) acc -= mpq_class(m[ii][j]) * x[j];
    x[ii] = acc / mpq_class(m[ii][ii]);
  }
  std::vector<Rational> out;
  out.reserve(n);
  for (auto& v : x) out.emplace_back(std::move(v));
  return RationalVector(std::move(out));
}

RationalMatrix inverse(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  if (a.determinant().is_zero()) throw std::domain_error("inverse of a singular matrix");
  RationalMatrix inv(a.rows(), a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    const auto col = solve_exact(a, RationalVector::unit(a.rows(), c));
    for (std::size_t r = 0; r < a.rows(); ++r) inv(r, c) = (*col)[r];
  }
  return inv;
}

}  // namespace weylalt
