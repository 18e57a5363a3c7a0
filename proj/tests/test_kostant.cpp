#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "support.hpp"
#include "weylalt/errors.hpp"
#include "weylalt/kostant.hpp"
#include "weylalt/lattice.hpp"
#include "weylalt/polynomial.hpp"

using namespace weylalt;
using weylalt::testing::combo;
using weylalt::testing::ints;

namespace {

QPolynomial poly(std::initializer_list<long> coeffs) {
  std::vector<mpz_class> c;
  for (long x : coeffs) c.emplace_back(x);
  return QPolynomial(std::move(c));
}

std::vector<std::pair<LieType, int>> oracle_systems() {
  return {{LieType::A, 2}, {LieType::A, 3}, {LieType::A, 4}, {LieType::B, 2}, {LieType::B, 3},
          {LieType::B, 4}, {LieType::C, 3}, {LieType::D, 4}, {LieType::G2, 2}};
}

std::vector<std::int64_t> random_point(std::mt19937_64& rng, std::size_t rank, int max_height) {
  std::vector<std::int64_t> c(rank, 0);
  const int h = std::uniform_int_distribution<int>(0, max_height)(rng);
  std::uniform_int_distribution<std::size_t> pick(0, rank - 1);
  for (int i = 0; i < h; ++i) ++c[pick(rng)];
  return c;
}

}  // namespace

TEST_CASE("polynomial basics") {
  CHECK(QPolynomial().str() == "0");
  CHECK(QPolynomial().degree() == -1);
  CHECK(poly({0, 1, 1}).str() == "q^2 + q");
  CHECK(poly({1, 0, -1}).str() == "-q^2 + 1");
  CHECK(poly({-1, 0, 0, 2}).str() == "2q^3 - 1");
  CHECK(poly({0, 0, 0}).is_zero());
  CHECK(poly({1, 2, 0, 0}).coeffs().size() == 2);
  CHECK(QPolynomial::one_plus_q_power(3) == poly({1, 3, 3, 1}));
  CHECK(QPolynomial::monomial(2) * QPolynomial::one_plus_q_power(1) == poly({0, 0, 1, 1}));
  CHECK(poly({1, 1}) - poly({1, 1}) == QPolynomial());
  CHECK(poly({1, 2, 3}).at_one() == 6);
  CHECK(poly({1, 2, 3}).evaluate(2) == 17);
  CHECK(poly({1, -1}).has_nonnegative_coefficients() == false);
  CHECK(poly({0, 1}).shifted(2) == QPolynomial::monomial(3));
  QPolynomial acc;
  acc.add_shifted(poly({1, 1}), 1, -2);
  CHECK(acc == poly({0, -2, -2}));
}

TEST_CASE("partition function examples") {
  const auto b2 = RootSystem::build(LieType::B, 2);
  const auto& a = b2.simple_roots();
  CHECK(partition_q(b2.zero(), b2) == QPolynomial::constant(1));
  CHECK(partition_q(a[0] + a[1], b2) == poly({0, 1, 1}));
  CHECK(partition_q_bruteforce(a[0] + a[1], b2) == poly({0, 1, 1}));

  const auto b3 = RootSystem::build(LieType::B, 3);
  const QPolynomial expected = QPolynomial::monomial(1) * QPolynomial::one_plus_q_power(2);
  CHECK(expected == poly({0, 1, 2, 1}));
  CHECK(partition_q(b3.fundamental_weights()[0], b3) == expected);
  CHECK(partition_q_bruteforce(b3.fundamental_weights()[0], b3) == expected);

  const auto a2 = RootSystem::build(LieType::A, 2);
  CHECK(partition_q(combo(a2.simple_roots(), {1, 1}), a2) == poly({0, 1, 1}));
  CHECK(partition_q_bruteforce(combo(a2.simple_roots(), {1, 1}), a2) == poly({0, 1, 1}));

  const RationalVector two_two = combo(a, {2, 2});
  CHECK(partition_q(two_two, b2) == partition_q_bruteforce(two_two, b2));
  CHECK(partition_q_bruteforce(b2.zero(), b2) == QPolynomial::constant(1));
}

TEST_CASE("arguments outside the cone give zero") {
  const auto b2 = RootSystem::build(LieType::B, 2);
  CHECK(partition_q(-b2.simple_roots()[0], b2).is_zero());
  CHECK(partition_q(RationalVector{Rational(1, 2), Rational(0)}, b2).is_zero());
  CHECK(partition_q_bruteforce(-b2.simple_roots()[0], b2).is_zero());
  const auto a2 = RootSystem::build(LieType::A, 2);
  CHECK(partition_q(ints({1, 1, 1}), a2).is_zero());
  PartitionFunction p(b2);
  CHECK(p(std::vector<std::int64_t>{-1, 3}).is_zero());
  CHECK_THROWS_AS(p(std::vector<std::int64_t>{1}), std::invalid_argument);
}

TEST_CASE("exhaustive search refuses tall arguments") {
  const auto b2 = RootSystem::build(LieType::B, 2);
  CHECK_THROWS_AS(partition_q_bruteforce(combo(b2.simple_roots(), {16, 15}), b2), HeightExceeded);
  CHECK_NOTHROW(partition_q_bruteforce(combo(b2.simple_roots(), {15, 15}), b2));
}

TEST_CASE("memoized and exhaustive counts agree on random points") {
  std::mt19937_64 rng(99);
  const auto systems = oracle_systems();
  for (int k = 0; k < 500; ++k) {
    const auto& [type, rank] = systems[static_cast<std::size_t>(k) % systems.size()];
    const auto rs = RootSystem::build(type, rank);
    const auto c = random_point(rng, static_cast<std::size_t>(rank), 12);
    const RationalVector xi = from_simple_root_coords(RationalVector::from_ints(c), rs);
    CAPTURE(rs.label());
    CAPTURE(xi.str());
    CHECK(partition_q(xi, rs) == partition_q_bruteforce(xi, rs));
  }
}

TEST_CASE("values on positive roots") {
  for (const auto& [type, rank] : weylalt::testing::all_systems()) {
    const auto rs = RootSystem::build(type, rank);
    CAPTURE(rs.label());
    PartitionFunction p(rs);
    for (const auto& c : rs.positive_roots_simple()) {
      const QPolynomial v = p(c);
      CHECK(v.coefficient(0) == 0);
      CHECK(v.coefficient(1) == 1);
      const auto height = std::accumulate(c.begin(), c.end(), std::int64_t{0});
      if (height == 1) CHECK(v == QPolynomial::monomial(1));
      CHECK(v.degree() == height);
      CHECK(v.has_nonnegative_coefficients());
    }
  }
}

TEST_CASE("support is closed under adding positive roots") {
  std::mt19937_64 rng(5);
  for (const auto& [type, rank] : oracle_systems()) {
    const auto rs = RootSystem::build(type, rank);
    PartitionFunction p(rs);
    for (int trial = 0; trial < 20; ++trial) {
      const auto c = random_point(rng, static_cast<std::size_t>(rank), 8);
      if (p(c).at_one() == 0) continue;
      for (const auto& beta : rs.positive_roots_simple()) {
        std::vector<std::int64_t> up = c;
        for (std::size_t j = 0; j < up.size(); ++j) up[j] += beta[j];
        CHECK(p(up).at_one() > 0);
      }
    }
  }
}

TEST_CASE("results do not depend on the root order") {
  std::mt19937_64 rng(17);
  for (const auto& [type, rank] : oracle_systems()) {
    const auto rs = RootSystem::build(type, rank);
    CAPTURE(rs.label());
    PartitionFunction reference(rs);
    for (int shuffle = 0; shuffle < 3; ++shuffle) {
      std::vector<std::size_t> order(rs.positive_roots().size());
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::shuffle(order.begin(), order.end(), rng);
      PartitionFunction permuted(rs, PartitionOptions{0, order});
      for (int trial = 0; trial < 15; ++trial) {
        const auto c = random_point(rng, static_cast<std::size_t>(rank), 10);
        CHECK(permuted(c) == reference(c));
      }
    }
  }
  const auto b2 = RootSystem::build(LieType::B, 2);
  CHECK_THROWS_AS(PartitionFunction(b2, PartitionOptions{0, {0, 1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(PartitionFunction(b2, PartitionOptions{0, {0, 1, 2, 2}}), std::invalid_argument);
}

TEST_CASE("cache persistence") {
  const auto b4 = RootSystem::build(LieType::B, 4);
  PartitionFunction p(b4);
  const std::vector<std::int64_t> xi{3, 4, 5, 6};
  const QPolynomial value = p(xi);
  REQUIRE(p.cache_size() > 0);

  std::stringstream file;
  p.save(file);
  PartitionFunction restored(b4);
  restored.load(file);
  CHECK(restored.cache_size() == p.cache_size());
  CHECK(restored(xi) == value);
  CHECK(restored.cache_size() == p.cache_size());

  std::stringstream again;
  restored.save(again);
  std::stringstream first;
  p.save(first);
  CHECK(again.str() == first.str());

  SUBCASE("other system") {
    PartitionFunction other(RootSystem::build(LieType::B, 3));
    std::stringstream in(first.str());
    CHECK_THROWS_AS(other.load(in), ParseError);
  }
  SUBCASE("other root order") {
    std::vector<std::size_t> order(b4.positive_roots().size());
    std::iota(order.rbegin(), order.rend(), std::size_t{0});
    PartitionFunction other(b4, PartitionOptions{0, order});
    std::stringstream in(first.str());
    CHECK_THROWS_AS(other.load(in), ParseError);
  }
  SUBCASE("garbage") {
    PartitionFunction other(b4);
    std::stringstream bad("not a cache\n");
    CHECK_THROWS_AS(other.load(bad), ParseError);
    std::string text = first.str();
    text.resize(text.size() / 2);
    std::stringstream truncated(text);
    CHECK_THROWS_AS(other.load(truncated), ParseError);
  }
}

TEST_CASE("cache limit and merging") {
  const auto b4 = RootSystem::build(LieType::B, 4);
  PartitionFunction limited(b4, PartitionOptions{5, {}});
  PartitionFunction full(b4);
  const std::vector<std::int64_t> xi{2, 3, 4, 5};
  CHECK(limited(xi) == full(xi));
  CHECK(limited.cache_size() <= 5);

  PartitionFunction merged(b4);
  merged.merge(full);
  CHECK(merged.cache_size() == full.cache_size());
  CHECK_THROWS_AS(merged.merge(PartitionFunction(RootSystem::build(LieType::C, 4))), std::invalid_argument);
  full.clear_cache();
  CHECK(full.cache_size() == 0);
}
