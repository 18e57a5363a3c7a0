#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "support.hpp"
#include "weylalt/errors.hpp"
#include "weylalt/lattice.hpp"
#include "weylalt/root_system.hpp"

using namespace weylalt;
using weylalt::testing::all_systems;
using weylalt::testing::ints;

namespace {

std::set<RationalVector> as_set(const std::vector<RationalVector>& v) { return {v.begin(), v.end()}; }

RationalVector scaled(long den, std::initializer_list<long> values) {
  std::vector<Rational> c;
  for (long v : values) c.emplace_back(v, den);
  return RationalVector(std::move(c));
}

// All 240 roots of E8 in the e-basis: +-e_i +- e_j and the half-spin
// vectors with an even number of minus signs.
std::vector<RationalVector> e8_roots() {
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j)
      for (int si : {-1, 1})
        for (int sj : {-1, 1}) {
          RationalVector v(8);
          v[i] = si;
          v[j] = sj;
          out.push_back(v);
        }
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2) continue;
    RationalVector v(8);
    for (std::size_t i = 0; i < 8; ++i) v[i] = Rational((mask >> i) & 1 ? -1 : 1, 2);
    out.push_back(v);
  }
  return out;
}

std::set<RationalVector> positive_half(const std::vector<RationalVector>& roots, const RootSystem& rs) {
  std::set<RationalVector> out;
  for (const auto& v : roots) {
    const RationalVector c = to_simple_root_coords(v, rs);
    if (std::all_of(c.coords().begin(), c.coords().end(), [](const Rational& x) { return x.sign() >= 0; }))
      out.insert(v);
  }
  return out;
}

std::size_t classical_positive_count(LieType t, int r) {
  switch (t) {
    case LieType::A: return static_cast<std::size_t>(r * (r + 1) / 2);
    case LieType::B:
    case LieType::C: return static_cast<std::size_t>(r * r);
    case LieType::D: return static_cast<std::size_t>(r * (r - 1));
    case LieType::G2: return 6;
    case LieType::F4: return 24;
    case LieType::E6: return 36;
    case LieType::E7: return 63;
    case LieType::E8: return 120;
  }
  return 0;
}

}  // namespace

TEST_CASE("type names") {
  CHECK(parse_lie_type("b") == LieType::B);
  CHECK(parse_lie_type("E8") == LieType::E8);
  CHECK(parse_lie_type("g2") == LieType::G2);
  CHECK_THROWS_AS(parse_lie_type("H3"), ParseError);
  CHECK(to_string(LieType::F4) == "F4");
  CHECK(RootSystem::build(LieType::B, 3).label() == "B3");
}

TEST_CASE("rank windows") {
  CHECK_THROWS_AS(RootSystem::build(LieType::A, 0), UnsupportedRank);
  CHECK_THROWS_AS(RootSystem::build(LieType::B, 1), UnsupportedRank);
  CHECK_THROWS_AS(RootSystem::build(LieType::C, 2), UnsupportedRank);
  CHECK_THROWS_AS(RootSystem::build(LieType::D, 3), UnsupportedRank);
  CHECK_THROWS_AS(RootSystem::build(LieType::G2, 3), UnsupportedRank);
  CHECK_THROWS_AS(RootSystem::build(LieType::E8, 7), UnsupportedRank);
  CHECK_NOTHROW(RootSystem::build(LieType::A, 1));
}

TEST_CASE("B2 root data") {
  const auto rs = RootSystem::build(LieType::B, 2);
  CHECK(as_set(rs.positive_roots()) == std::set<RationalVector>{ints({1, -1}), ints({1, 1}), ints({1, 0}), ints({0, 1})});
  CHECK(rs.simple_roots() == std::vector<RationalVector>{ints({1, -1}), ints({0, 1})});
}

TEST_CASE("G2 root data") {
  const auto rs = RootSystem::build(LieType::G2, 2);
  CHECK(rs.positive_roots().size() == 6);
  CHECK(rs.simple_roots()[0] == ints({1, -1, 0}));
  CHECK(rs.simple_roots()[1] == ints({-2, 1, 1}));
  for (const auto& a : rs.positive_roots()) CHECK(dot(a, ints({1, 1, 1})) == Rational(0));
}

TEST_CASE("E-type roots match an independent generation") {
  const auto all = e8_roots();
  REQUIRE(all.size() == 240);
  const auto e8 = RootSystem::build(LieType::E8, 8);
  const auto pos8 = positive_half(all, e8);
  CHECK(pos8.size() == 120);
  CHECK(pos8 == as_set(e8.positive_roots()));

  const RationalVector e6_minus_e7 = ints({0, 0, 0, 0, 0, 1, -1, 0});
  const RationalVector e7_plus_e8 = ints({0, 0, 0, 0, 0, 0, 1, 1});
  std::vector<RationalVector> r7, r6;
  for (const auto& v : all) {
    if (dot(v, e7_plus_e8).is_zero()) {
      r7.push_back(v);
      if (dot(v, e6_minus_e7).is_zero()) r6.push_back(v);
    }
  }
  CHECK(r7.size() == 126);
  CHECK(r6.size() == 72);
  const auto e7 = RootSystem::build(LieType::E7, 7);
  const auto e6 = RootSystem::build(LieType::E6, 6);
  CHECK(positive_half(r7, e7) == as_set(e7.positive_roots()));
  CHECK(positive_half(r6, e6) == as_set(e6.positive_roots()));
}

TEST_CASE("root system invariants for every supported system") {
  for (const auto& [type, rank] : all_systems()) {
    const auto rs = RootSystem::build(type, rank);
    CAPTURE(rs.label());
    CHECK(rs.simple_roots().size() == static_cast<std::size_t>(rank));
    CHECK(rs.positive_roots().size() == classical_positive_count(type, rank));
    CHECK(as_set(rs.positive_roots()).size() == rs.positive_roots().size());

    RationalVector half_sum = rs.zero();
    for (const auto& a : rs.positive_roots()) half_sum += a;
    half_sum *= Rational(1, 2);
    RationalVector weight_sum = rs.zero();
    for (const auto& w : rs.fundamental_weights()) weight_sum += w;
    CHECK(half_sum == rs.rho());
    CHECK(weight_sum == rs.rho());

    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        CHECK(rs.coroot_pairing(rs.fundamental_weights()[static_cast<std::size_t>(i)], j) ==
              Rational(i == j ? 1 : 0));

    for (const auto& a : rs.positive_roots()) {
      const RationalVector c = to_simple_root_coords(a, rs);
      CHECK(c.is_integral());
      for (const auto& x : c.coords()) CHECK(x.sign() >= 0);
    }
    for (int i = 0; i < rank; ++i)
      CHECK(to_simple_root_coords(rs.simple_roots()[static_cast<std::size_t>(i)], rs) ==
            RationalVector::unit(static_cast<std::size_t>(rank), static_cast<std::size_t>(i)));

    // Highest root: a root whose simple coordinates dominate every other root's.
    const RationalVector top = to_simple_root_coords(rs.highest_root(), rs);
    for (const auto& a : rs.positive_roots()) {
      const RationalVector c = to_simple_root_coords(a, rs);
      for (std::size_t k = 0; k < c.dim(); ++k) CHECK(c[k] <= top[k]);
    }

    for (const auto& w : rs.fundamental_weights()) {
      CHECK(is_dominant(w, rs));
      CHECK_FALSE(is_dominant(-w, rs));
    }
    CHECK(is_dominant(rs.zero(), rs));
  }
}

TEST_CASE("Cartan determinants and group orders") {
  const auto det = [](LieType t, int r) { return RootSystem::build(t, r).cartan_determinant(); };
  for (int r = 1; r <= 8; ++r) CHECK(det(LieType::A, r) == r + 1);
  for (int r = 2; r <= 8; ++r) CHECK(det(LieType::B, r) == 2);
  for (int r = 3; r <= 8; ++r) CHECK(det(LieType::C, r) == 2);
  for (int r = 4; r <= 8; ++r) CHECK(det(LieType::D, r) == 4);
  CHECK(det(LieType::G2, 2) == 1);
  CHECK(det(LieType::F4, 4) == 1);
  CHECK(det(LieType::E6, 6) == 3);
  CHECK(det(LieType::E7, 7) == 2);
  CHECK(det(LieType::E8, 8) == 1);

  CHECK(RootSystem::build(LieType::B, 8).weyl_group_order() == 10321920);
  CHECK(RootSystem::build(LieType::A, 4).weyl_group_order() == 120);
  CHECK(RootSystem::build(LieType::D, 4).weyl_group_order() == 192);
  CHECK(RootSystem::build(LieType::E8, 8).weyl_group_order() == 696729600);
}

TEST_CASE("classical fundamental weights") {
  for (int r = 2; r <= 6; ++r) {
    const auto b = RootSystem::build(LieType::B, r);
    RationalVector partial = b.zero();
    for (int i = 0; i + 1 < r; ++i) {
      partial[static_cast<std::size_t>(i)] = 1;
      CHECK(b.fundamental_weights()[static_cast<std::size_t>(i)] == partial);
    }
    RationalVector spin(static_cast<std::size_t>(r));
    for (std::size_t i = 0; i < spin.dim(); ++i) spin[i] = Rational(1, 2);
    CHECK(b.fundamental_weights().back() == spin);
    const RationalVector ones(std::vector<Rational>(static_cast<std::size_t>(r), Rational(1)));
    CHECK(b.fundamental_weights()[0] == from_simple_root_coords(ones, b));
  }
  for (int r = 4; r <= 6; ++r) {
    const auto d = RootSystem::build(LieType::D, r);
    RationalVector minus(static_cast<std::size_t>(r)), plus(static_cast<std::size_t>(r));
    for (std::size_t i = 0; i < plus.dim(); ++i) {
      plus[i] = Rational(1, 2);
      minus[i] = Rational(1, 2);
    }
    minus[static_cast<std::size_t>(r - 1)] = Rational(-1, 2);
    CHECK(d.fundamental_weights()[static_cast<std::size_t>(r - 2)] == minus);
    CHECK(d.fundamental_weights()[static_cast<std::size_t>(r - 1)] == plus);
  }
  const auto b3 = RootSystem::build(LieType::B, 3);
  CHECK(b3.rho() == RationalVector{Rational(5, 2), Rational(3, 2), Rational(1, 2)});
}

TEST_CASE("exceptional fundamental weights in simple-root coordinates") {
  const auto simple = [](LieType t, int r) {
    const auto rs = RootSystem::build(t, r);
    std::vector<RationalVector> out;
    for (const auto& w : rs.fundamental_weights()) out.push_back(to_simple_root_coords(w, rs));
    return out;
  };

  SUBCASE("G2") {
    const auto w = simple(LieType::G2, 2);
    CHECK(w[0] == ints({2, 1}));
    // The printed table gives 3a1 + a2 for the second weight; the dual
    // basis forces 3a1 + 2a2.
    CHECK(w[1] == ints({3, 2}));
    const auto g2 = RootSystem::build(LieType::G2, 2);
    CHECK(to_fundamental_coords(from_simple_root_coords(ints({3, 1}), g2), g2) != ints({0, 1}));
  }
  SUBCASE("F4, table indices reversed") {
    const auto w = simple(LieType::F4, 4);
    // Rows of the table, in the table's own labeling.
    const std::vector<RationalVector> table{ints({2, 3, 2, 1}), ints({3, 6, 4, 2}), ints({4, 8, 6, 3}),
                                            ints({2, 4, 3, 2})};
    for (std::size_t i = 0; i < 4; ++i) {
      RationalVector reversed(4);
      for (std::size_t j = 0; j < 4; ++j) reversed[j] = table[i][3 - j];
      CHECK(w[3 - i] == reversed);
    }
  }
  SUBCASE("E6") {
    const auto w = simple(LieType::E6, 6);
    CHECK(w[0] == scaled(3, {4, 3, 5, 6, 4, 2}));
    CHECK(w[1] == ints({1, 2, 2, 3, 2, 1}));
    CHECK(w[2] == scaled(3, {5, 6, 10, 12, 8, 4}));
    CHECK(w[3] == ints({2, 3, 4, 6, 4, 2}));
    CHECK(w[4] == scaled(3, {4, 6, 8, 12, 10, 5}));
    CHECK(w[5] == scaled(3, {2, 3, 4, 6, 5, 4}));
  }
  SUBCASE("E7") {
    const auto w = simple(LieType::E7, 7);
    CHECK(w[0] == ints({2, 2, 3, 4, 3, 2, 1}));
    CHECK(w[1] == scaled(2, {4, 7, 8, 12, 9, 6, 3}));
    CHECK(w[2] == ints({3, 4, 6, 8, 6, 4, 2}));
    CHECK(w[3] == ints({4, 6, 8, 12, 9, 6, 3}));
    CHECK(w[4] == scaled(2, {6, 9, 12, 18, 15, 10, 5}));
    CHECK(w[5] == ints({2, 3, 4, 6, 5, 4, 2}));
    CHECK(w[6] == scaled(2, {2, 3, 4, 6, 5, 4, 3}));
  }
  SUBCASE("E8") {
    const auto w = simple(LieType::E8, 8);
    CHECK(w[0] == ints({4, 5, 7, 10, 8, 6, 4, 2}));
    CHECK(w[1] == ints({5, 8, 10, 15, 12, 9, 6, 3}));
    CHECK(w[2] == ints({7, 10, 14, 20, 16, 12, 8, 4}));
    CHECK(w[3] == ints({10, 15, 20, 30, 24, 18, 12, 6}));
    CHECK(w[4] == ints({8, 12, 16, 24, 20, 15, 10, 5}));
    CHECK(w[5] == ints({6, 9, 12, 18, 15, 12, 8, 4}));
    CHECK(w[6] == ints({4, 6, 8, 12, 10, 8, 6, 3}));
    CHECK(w[7] == ints({2, 3, 4, 6, 5, 4, 3, 2}));
  }
}

TEST_CASE("sum of simple roots in the fundamental basis") {
  for (int r = 2; r <= 8; ++r) {
    const auto b = RootSystem::build(LieType::B, r);
    CHECK(sum_of_simple_roots_in_fundamental_basis(b) ==
          RationalVector::unit(static_cast<std::size_t>(r), 0));
  }
  for (int r = 4; r <= 8; ++r) {
    const auto d = RootSystem::build(LieType::D, r);
    RationalVector expected(static_cast<std::size_t>(r));
    expected[0] += 1;
    expected[static_cast<std::size_t>(r - 3)] -= 1;
    expected[static_cast<std::size_t>(r - 2)] += 1;
    expected[static_cast<std::size_t>(r - 1)] += 1;
    CHECK(sum_of_simple_roots_in_fundamental_basis(d) == expected);
  }
  CHECK(sum_of_simple_roots_in_fundamental_basis(RootSystem::build(LieType::E7, 7)) == ints({1, 1, 0, -1, 0, 0, 1}));
  CHECK(sum_of_simple_roots_in_fundamental_basis(RootSystem::build(LieType::A, 1)) == ints({2}));
}

TEST_CASE("dominance of the sum of simple roots") {
  const auto total = [](const RootSystem& rs) {
    RationalVector v = rs.zero();
    for (const auto& a : rs.simple_roots()) v += a;
    return v;
  };
  for (int r = 2; r <= 8; ++r) {
    const auto b = RootSystem::build(LieType::B, r);
    CHECK(is_dominant(total(b), b));
  }
  const auto c3 = RootSystem::build(LieType::C, 3);
  CHECK_FALSE(is_dominant(total(c3), c3));
  const auto a2 = RootSystem::build(LieType::A, 2);
  CHECK_THROWS_AS(is_dominant(ints({1, 0, 0}), a2), NotInRootSpan);
}

TEST_CASE("dominant integral weights in a box") {
  const auto b2 = RootSystem::build(LieType::B, 2);
  CHECK(as_set(dominant_integral_weights_in_box(b2, Rational(1))) ==
        std::set<RationalVector>{ints({0, 0}), RationalVector{Rational(1, 2), Rational(1, 2)}, ints({1, 0}),
                                 ints({1, 1})});
  CHECK(dominant_integral_weights_in_box(b2, Rational(0)) == std::vector<RationalVector>{b2.zero()});
  const auto b3 = RootSystem::build(LieType::B, 3);
  CHECK(dominant_integral_weights_in_box(b3, Rational(1)).size() == 5);
  CHECK(dominant_integral_weights_in_box(RootSystem::build(LieType::G2, 2), Rational(0)).size() == 1);

  // Oracle for B_r: k_1 >= ... >= k_r >= 0 on the half-integer grid, all
  // integral or all half-odd, with k_1 <= bound.
  for (int r = 2; r <= 4; ++r) {
    const auto rs = RootSystem::build(LieType::B, r);
    for (long twice_bound : {1L, 2L, 3L, 4L}) {
      const Rational bound(twice_bound, 2);
      std::set<RationalVector> expected;
      std::vector<long> k(static_cast<std::size_t>(r), 0);  // doubled coordinates
      const std::function<void(std::size_t, long)> fill = [&](std::size_t i, long top) {
        if (i == k.size()) {
          const bool parity_ok = std::all_of(k.begin(), k.end(), [&](long x) { return (x - k[0]) % 2 == 0; });
          if (!parity_ok) return;
          RationalVector v(k.size());
          for (std::size_t j = 0; j < k.size(); ++j) v[j] = Rational(k[j], 2);
          expected.insert(v);
          return;
        }
        for (long x = 0; x <= top; ++x) {
          k[i] = x;
          fill(i + 1, x);
        }
      };
      fill(0, twice_bound);
      const auto actual = dominant_integral_weights_in_box(rs, bound);
      CHECK(as_set(actual) == expected);
      CHECK(actual.size() == expected.size());
      CHECK(std::is_sorted(actual.begin(), actual.end()));
    }
  }
}
