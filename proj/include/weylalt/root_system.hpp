#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "weylalt/rational.hpp"

namespace weylalt {

enum class LieType { A, B, C, D, G2, F4, E6, E7, E8 };

std::string to_string(LieType type);
/// Accepts "A".."E8" case-insensitively; throws ParseError.
LieType parse_lie_type(std::string_view text);

/// Complete root datum of one simple Lie algebra, realized in ambient
/// coordinates e_1..e_n with the standard dot product as bilinear form.
///
/// Realizations:
///   A_r  simple roots e_i - e_{i+1} in R^{r+1} (root span is the sum-zero hyperplane)
///   B_r  e_i - e_{i+1}, e_r in R^r
///   C_r  e_i - e_{i+1}, 2 e_r in R^r
///   D_r  e_i - e_{i+1}, e_{r-1} + e_r in R^r
///   G2   e1 - e2, -2e1 + e2 + e3 inside {v : (v, e1+e2+e3) = 0} of R^3
///   F4   e2 - e3, e3 - e4, e4, (e1 - e2 - e3 - e4)/2 in R^4
///   E8   (e1 - e2 - ... - e7 + e8)/2, e1 + e2, e2 - e1, e3 - e2, ..., e7 - e6 in R^8
///   E7, E6  the first 7 / 6 of the E8 simple roots, living in the subspaces
///        {(v, e7+e8) = 0} and {(v, e6-e7) = (v, e7+e8) = 0}.
///
/// Instances are immutable once built.
class RootSystem {
 public:
  /// Throws UnsupportedRank outside A: r>=1, B: r>=2, C: r>=3, D: r>=4;
  /// exceptional types require their own rank.
  static RootSystem build(LieType type, int rank);

  LieType type() const { return type_; }
  int rank() const { return rank_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  /// e.g. "B3", "G2".
  std::string label() const;

  const std::vector<RationalVector>& simple_roots() const { return simple_roots_; }
  const std::vector<RationalVector>& positive_roots() const { return positive_roots_; }
  const std::vector<RationalVector>& fundamental_weights() const { return fundamental_weights_; }
  const RationalVector& rho() const { return rho_; }
  const RationalVector& highest_root() const { return highest_root_; }
  RationalVector zero() const { return RationalVector(ambient_dim_); }

  /// cartan(i, j) = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i), zero-based.
  int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * rank_ + j)]; }
  RationalMatrix cartan_matrix() const;
  /// Integer determinant of the Cartan matrix.
  std::int64_t cartan_determinant() const { return cartan_det_; }
  /// det(C) * C^{-1}, an integer matrix (row-major, rank x rank).
  const std::vector<std::int64_t>& scaled_inverse_cartan() const { return scaled_inv_cartan_; }

  Rational form(const RationalVector& a, const RationalVector& b) const { return dot(a, b); }
  /// <v, alpha_i^vee> = 2 (v, alpha_i) / (alpha_i, alpha_i).
  Rational coroot_pairing(const RationalVector& v, int i) const;

  /// Columns are the simple roots.
  const RationalMatrix& simple_root_matrix() const { return simple_matrix_; }
  /// Columns are the fundamental weights.
  const RationalMatrix& fundamental_weight_matrix() const { return fundamental_matrix_; }
  /// Left inverse of simple_root_matrix(); exact on the root span.
  const RationalMatrix& simple_root_left_inverse() const { return simple_left_inverse_; }

  /// Positive roots as simple-root coordinate vectors (same order as positive_roots()).
  const std::vector<std::vector<std::int64_t>>& positive_roots_simple() const {
    return positive_simple_;
  }

  /// |W| from the classical order formulas.
  mpz_class weyl_group_order() const;

 private:
  RootSystem() = default;
  void finish(std::vector<RationalVector> explicit_fundamentals);

  LieType type_ = LieType::A;
  int rank_ = 0;
  std::size_t ambient_dim_ = 0;
  std::vector<RationalVector> simple_roots_;
  std::vector<RationalVector> positive_roots_;
  std::vector<RationalVector> fundamental_weights_;
  RationalVector rho_{1};
  RationalVector highest_root_{1};
  std::vector<int> cartan_;
  std::int64_t cartan_det_ = 1;
  std::vector<std::int64_t> scaled_inv_cartan_;
  RationalMatrix simple_matrix_{0, 0};
  RationalMatrix fundamental_matrix_{0, 0};
  RationalMatrix simple_left_inverse_{0, 0};
  std::vector<std::vector<std::int64_t>> positive_simple_;
};

/// Coefficients m with sum(simple roots) = sum m_i varpi_i.
RationalVector sum_of_simple_roots_in_fundamental_basis(const RootSystem& rs);

/// True iff every fundamental-weight coefficient of w is >= 0.
/// Propagates NotInRootSpan.
bool is_dominant(const RationalVector& w, const RootSystem& rs);

/// Dominant integral weights all of whose ambient coordinates lie in
/// [-bound, bound], sorted. For B_r this is exactly the set
/// k_1 e_1 + ... + k_r e_r with k_1 >= ... >= k_r >= 0, 2k_i and k_i - k_j
/// integral, and k_1 <= bound.
std::vector<RationalVector> dominant_integral_weights_in_box(const RootSystem& rs,
                                                             const Rational& bound);

}  // namespace weylalt
