#pragma once
// Shared fixtures for the unit tests.

#include <utility>
#include <vector>

#include "weylalt/root_system.hpp"

namespace weylalt::testing {

inline const std::vector<std::pair<LieType, int>>& all_systems() {
  static const std::vector<std::pair<LieType, int>> systems = [] {
    std::vector<std::pair<LieType, int>> out;
    for (int r = 1; r <= 8; ++r) out.emplace_back(LieType::A, r);
    for (int r = 2; r <= 8; ++r) out.emplace_back(LieType::B, r);
    for (int r = 3; r <= 8; ++r) out.emplace_back(LieType::C, r);
    for (int r = 4; r <= 8; ++r) out.emplace_back(LieType::D, r);
    out.emplace_back(LieType::G2, 2);
    out.emplace_back(LieType::F4, 4);
    out.emplace_back(LieType::E6, 6);
    out.emplace_back(LieType::E7, 7);
    out.emplace_back(LieType::E8, 8);
    return out;
  }();
  return systems;
}

inline RationalVector ints(std::initializer_list<long> values) {
  std::vector<Rational> c;
  for (long v : values) c.emplace_back(v);
  return RationalVector(std::move(c));
}

inline RationalVector combo(const std::vector<RationalVector>& basis, std::initializer_list<long> coeffs) {
  RationalVector out(basis.front().dim());
  std::size_t i = 0;
  for (long c : coeffs) out += Rational(c) * basis[i++];
  return out;
}

}  // namespace weylalt::testing
