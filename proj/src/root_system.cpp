#include "weylalt/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "weylalt/errors.hpp"
#include "weylalt/lattice.hpp"

namespace weylalt {
namespace {

RationalVector e(std::size_t dim, std::size_t i) { return RationalVector::unit(dim, i); }

const Rational kHalf(1, 2);

// Half-spin vector (1/2) sum s_i e_i with s_i = -1 where minus[i] is set.
RationalVector half_spin(std::size_t dim, const std::vector<bool>& minus) {
  RationalVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = minus[i] ? -kHalf : kHalf;
  return v;
}

}  // namespace

std::string to_string(LieType type) {
  switch (type) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
    case LieType::G2: return "G2";
    case LieType::F4: return "F4";
    case LieType::E6: return "E6";
    case LieType::E7: return "E7";
    case LieType::E8: return "E8";
  }
  return "?";
}

LieType parse_lie_type(std::string_view text) {
  std::string up(text);
  for (auto& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D, LieType::G2, LieType::F4,
                    LieType::E6, LieType::E7, LieType::E8}) {
    if (up == to_string(t)) return t;
  }
  throw ParseError("unknown Lie type '" + std::string(text) + "'");
}

std::string RootSystem::label() const {
  switch (type_) {
    case LieType::A:
    case LieType::B:
    case LieType::C:
    case LieType::D: return to_string(type_) + std::to_string(rank_);
    default: return to_string(type_);
  }
}

RootSystem RootSystem::build(LieType type, int rank) {
  const auto reject = [&] {
    throw UnsupportedRank("rank " + std::to_string(rank) + " is not supported for type " +
                          to_string(type));
  };
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  std::vector<RationalVector> fundamentals;
  const auto r = static_cast<std::size_t>(std::max(rank, 0));

  switch (type) {
    case LieType::A: {
      if (rank < 1) reject();
      const std::size_t n = r + 1;
      rs.ambient_dim_ = n;
      for (std::size_t i = 0; i < r; ++i) rs.simple_roots_.push_back(e(n, i) - e(n, i + 1));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) rs.positive_roots_.push_back(e(n, i) - e(n, j));
      RationalVector all(n);
      for (std::size_t k = 0; k < n; ++k) all[k] = 1;
      RationalVector partial(n);
      for (std::size_t i = 0; i < r; ++i) {
        partial += e(n, i);
        fundamentals.push_back(partial - Rational(static_cast<long>(i + 1), static_cast<long>(n)) * all);
      }
      break;
    }
    case LieType::B:
    case LieType::C:
    case LieType::D: {
      const int min_rank = type == LieType::B ? 2 : (type == LieType::C ? 3 : 4);
      if (rank < min_rank) reject();
      rs.ambient_dim_ = r;
      for (std::size_t i = 0; i + 1 < r; ++i) rs.simple_roots_.push_back(e(r, i) - e(r, i + 1));
      if (type == LieType::B) rs.simple_roots_.push_back(e(r, r - 1));
      if (type == LieType::C) rs.simple_roots_.push_back(Rational(2) * e(r, r - 1));
      if (type == LieType::D) rs.simple_roots_.push_back(e(r, r - 2) + e(r, r - 1));
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
          rs.positive_roots_.push_back(e(r, i) - e(r, j));
          rs.positive_roots_.push_back(e(r, i) + e(r, j));
        }
      }
      if (type == LieType::B)
        for (std::size_t i = 0; i < r; ++i) rs.positive_roots_.push_back(e(r, i));
      if (type == LieType::C)
        for (std::size_t i = 0; i < r; ++i) rs.positive_roots_.push_back(Rational(2) * e(r, i));

      RationalVector partial(r);
      for (std::size_t i = 0; i < r; ++i) {
        partial += e(r, i);
        fundamentals.push_back(partial);
      }
      if (type == LieType::B) {
        fundamentals[r - 1] = kHalf * fundamentals[r - 1];
      } else if (type == LieType::D) {
        RationalVector head = fundamentals[r - 2];
        fundamentals[r - 2] = kHalf * (head - e(r, r - 1));
        fundamentals[r - 1] = kHalf * (head + e(r, r - 1));
      }
      break;
    }
    case LieType::G2: {
      if (rank != 2) reject();
      rs.ambient_dim_ = 3;
      const auto v = [](long a, long b, long c) { return RationalVector{a, b, c}; };
      rs.simple_roots_ = {v(1, -1, 0), v(-2, 1, 1)};
      // a1, a2, a1+a2, 2a1+a2, 3a1+a2, 3a1+2a2
      rs.positive_roots_ = {v(1, -1, 0),  v(-2, 1, 1), v(-1, 0, 1),
                            v(0, -1, 1),  v(1, -2, 1), v(-1, -1, 2)};
      break;
    }
    case LieType::F4: {
      if (rank != 4) reject();
      rs.ambient_dim_ = 4;
      rs.simple_roots_ = {e(4, 1) - e(4, 2), e(4, 2) - e(4, 3), e(4, 3),
                          half_spin(4, {false, true, true, true})};
      for (std::size_t i = 0; i < 4; ++i) rs.positive_roots_.push_back(e(4, i));
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
          rs.positive_roots_.push_back(e(4, i) - e(4, j));
          rs.positive_roots_.push_back(e(4, i) + e(4, j));
        }
      }
      for (int mask = 0; mask < 8; ++mask) {
        rs.positive_roots_.push_back(
            half_spin(4, {false, (mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0}));
      }
      break;
    }
    case LieType::E6:
    case LieType::E7:
    case LieType::E8: {
      const int expected = type == LieType::E6 ? 6 : (type == LieType::E7 ? 7 : 8);
      if (rank != expected) reject();
      const std::size_t n = 8;
      rs.ambient_dim_ = n;
      const std::vector<RationalVector> e8_simple = {
          half_spin(n, {false, true, true, true, true, true, true, false}),
          e(n, 0) + e(n, 1),
          e(n, 1) - e(n, 0),
          e(n, 2) - e(n, 1),
          e(n, 3) - e(n, 2),
          e(n, 4) - e(n, 3),
          e(n, 5) - e(n, 4),
          e(n, 6) - e(n, 5)};
      rs.simple_roots_.assign(e8_simple.begin(), e8_simple.begin() + expected);

      // D-part: +-e_i + e_j for i < j < m.
      const std::size_t m = type == LieType::E6 ? 5 : (type == LieType::E7 ? 6 : 8);
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          rs.positive_roots_.push_back(e(n, j) - e(n, i));
          rs.positive_roots_.push_back(e(n, j) + e(n, i));
        }
      }
      if (type == LieType::E7) rs.positive_roots_.push_back(e(n, 7) - e(n, 6));
      // Spin part: (1/2)(e8 + sum_{i<8} +-e_i) with an even total number of
      // minus signs; E7 forces e7 -> -1/2, E6 forces e6, e7 -> -1/2.
      for (int mask = 0; mask < (1 << 7); ++mask) {
        std::vector<bool> minus(n, false);
        int count = 0;
        for (std::size_t i = 0; i < 7; ++i) {
          minus[i] = (mask >> i) & 1;
          count += minus[i] ? 1 : 0;
        }
        if (count % 2) continue;
        if (type != LieType::E8 && !minus[6]) continue;
        if (type == LieType::E6 && !minus[5]) continue;
        rs.positive_roots_.push_back(half_spin(n, minus));
      }
      break;
    }
  }
  rs.finish(std::move(fundamentals));
  return rs;
}

void RootSystem::finish(std::vector<RationalVector> explicit_fundamentals) {
  const auto r = static_cast<std::size_t>(rank_);
  if (simple_roots_.size() != r) throw std::logic_error("simple root count differs from rank");

  cartan_.assign(r * r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    const Rational norm = dot(simple_roots_[i], simple_roots_[i]);
    for (std::size_t j = 0; j < r; ++j) {
      const Rational c = Rational(2) * dot(simple_roots_[i], simple_roots_[j]) / norm;
      cartan_[i * r + j] = static_cast<int>(c.to_int64());
    }
  }
  const RationalMatrix cm = cartan_matrix();
  cartan_det_ = cm.determinant().to_int64();
  const RationalMatrix cinv = inverse(cm);
  scaled_inv_cartan_.resize(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      scaled_inv_cartan_[i * r + j] = (Rational(cartan_det_) * cinv(i, j)).to_int64();

  simple_matrix_ = RationalMatrix::from_columns(simple_roots_);
  const RationalMatrix st = simple_matrix_.transpose();
  simple_left_inverse_ = inverse(st * simple_matrix_) * st;

  // varpi_j = sum_i (C^{-1})_{ij} alpha_i; this is the dual basis inside the root span.
  const RationalMatrix dual = simple_matrix_ * cinv;
  if (explicit_fundamentals.empty()) {
    for (std::size_t j = 0; j < r; ++j) fundamental_weights_.push_back(dual.column(j));
  } else {
    fundamental_weights_ = std::move(explicit_fundamentals);
  }
  fundamental_matrix_ = RationalMatrix::from_columns(fundamental_weights_);

  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (coroot_pairing(fundamental_weights_[i], static_cast<int>(j)) != Rational(i == j ? 1 : 0))
        throw std::logic_error(label() + ": fundamental weights are not dual to the coroots");
    }
  }

  positive_simple_.clear();
  std::size_t best = 0;
  std::int64_t best_height = -1;
  for (std::size_t k = 0; k < positive_roots_.size(); ++k) {
    const RationalVector c = to_simple_root_coords(positive_roots_[k], *this);
    std::vector<std::int64_t> ints(r);
    std::int64_t height = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (!c[i].is_integer() || c[i].sign() < 0)
        throw std::logic_error(label() + ": positive root " + positive_roots_[k].str() +
                               " is not a nonnegative integer combination of simple roots");
      ints[i] = c[i].to_int64();
      height += ints[i];
    }
    if (height > best_height) {
      best_height = height;
      best = k;
    }
    positive_simple_.push_back(std::move(ints));
  }
  highest_root_ = positive_roots_[best];

  RationalVector half_sum(ambient_dim_);
  for (const auto& a : positive_roots_) half_sum += a;
  half_sum *= kHalf;
  RationalVector weight_sum(ambient_dim_);
  for (const auto& w : fundamental_weights_) weight_sum += w;
  if (half_sum != weight_sum)
    throw std::logic_error(label() + ": half-sum of positive roots differs from sum of fundamental weights");
  rho_ = half_sum;
}

RationalMatrix RootSystem::cartan_matrix() const {
  const auto r = static_cast<std::size_t>(rank_);
  RationalMatrix m(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m(i, j) = cartan_[i * r + j];
  return m;
}

Rational RootSystem::coroot_pairing(const RationalVector& v, int i) const {
  const auto& a = simple_roots_[static_cast<std::size_t>(i)];
  return Rational(2) * dot(v, a) / dot(a, a);
}

mpz_class RootSystem::weyl_group_order() const {
  mpz_class fact;
  switch (type_) {
    case LieType::A:
      mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(rank_ + 1));
      return fact;
    case LieType::B:
    case LieType::C:
      mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(rank_));
      return fact << rank_;
    case LieType::D:
      mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(rank_));
      return fact << (rank_ - 1);
    case LieType::G2: return 12;
    case LieType::F4: return 1152;
    case LieType::E6: return 51840;
    case LieType::E7: return 2903040;
    case LieType::E8: return 696729600;
  }
  return 0;
}

RationalVector sum_of_simple_roots_in_fundamental_basis(const RootSystem& rs) {
  RationalVector sum = rs.zero();
  for (const auto& a : rs.simple_roots()) sum += a;
  return to_fundamental_coords(sum, rs);
}

bool is_dominant(const RationalVector& w, const RootSystem& rs) {
  const RationalVector m = to_fundamental_coords(w, rs);
  return std::all_of(m.coords().begin(), m.coords().end(),
                     [](const Rational& x) { return x.sign() >= 0; });
}

std::vector<RationalVector> dominant_integral_weights_in_box(const RootSystem& rs,
                                                             const Rational& bound) {
  if (bound.sign() < 0) throw std::invalid_argument("box bound must be nonnegative");
  const auto r = static_cast<std::size_t>(rs.rank());
  const auto& fw = rs.fundamental_weights();
  // (varpi_i, varpi_j) >= 0 for every simple type, so (mu, mu) >= m_i^2 (varpi_i, varpi_i);
  // all coordinates in [-bound, bound] gives (mu, mu) <= dim * bound^2.
  const Rational norm_cap = Rational(static_cast<long>(rs.ambient_dim())) * bound * bound;
  std::vector<std::int64_t> limit(r);
  for (std::size_t i = 0; i < r; ++i) {
    const Rational self = dot(fw[i], fw[i]);
    std::int64_t m = 0;
    while (Rational(static_cast<long>((m + 1) * (m + 1))) * self <= norm_cap) ++m;
    limit[i] = m;
  }

  std::vector<RationalVector> out;
  std::vector<std::int64_t> coeffs(r, 0);
  const std::function<void(std::size_t, const RationalVector&)> walk =
      [&](std::size_t i, const RationalVector& partial) {
        if (i == r) {
          const bool inside = std::all_of(partial.coords().begin(), partial.coords().end(),
                                          [&](const Rational& x) { return -bound <= x && x <= bound; });
          if (inside) out.push_back(partial);
          return;
        }
        for (std::int64_t m = 0; m <= limit[i]; ++m) {
          walk(i + 1, partial + Rational(static_cast<long>(m)) * fw[i]);
        }
      };
  walk(0, rs.zero());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace weylalt
