#include "weylalt/polynomial.hpp"

#include <algorithm>

namespace weylalt {

QPolynomial::QPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPolynomial QPolynomial::constant(long c) { return QPolynomial({mpz_class(c)}); }

QPolynomial QPolynomial::monomial(std::size_t degree, long c) {
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::one_plus_q_power(std::size_t n) {
  std::vector<mpz_class> v(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    mpz_bin_uiui(v[k].get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return QPolynomial(std::move(v));
}

mpz_class QPolynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : mpz_class(0);
}

bool QPolynomial::has_nonnegative_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c >= 0; });
}

mpz_class QPolynomial::evaluate(const mpz_class& q) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

mpz_class QPolynomial::at_one() const {
  mpz_class acc = 0;
  for (const auto& c : coeffs_) acc += c;
  return acc;
}

QPolynomial QPolynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<mpz_class> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return QPolynomial(std::move(v));
}

void QPolynomial::add_shifted(const QPolynomial& other, std::size_t k, long c) {
  if (other.is_zero() || c == 0) return;
  if (coeffs_.size() < other.coeffs_.size() + k) coeffs_.resize(other.coeffs_.size() + k);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    if (c == 1) {
      coeffs_[i + k] += other.coeffs_[i];
    } else {
      coeffs_[i + k] += c * other.coeffs_[i];
    }
  }
  trim();
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  add_shifted(o, 0, 1);
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  add_shifted(o, 0, -1);
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<mpz_class> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(v);
  trim();
  return *this;
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string QPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const mpz_class mag = abs(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += 'q';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const QPolynomial& p) { return os << p.str(); }

}  // namespace weylalt
