#include "weylalt/lattice.hpp"

#include "weylalt/errors.hpp"
#include "weylalt/root_system.hpp"

namespace weylalt {

RationalVector to_simple_root_coords(const RationalVector& w, const RootSystem& rs) {
  if (w.dim() != rs.ambient_dim())
    throw NotInRootSpan("vector " + w.str() + " has dimension " + std::to_string(w.dim()) +
                        ", expected " + std::to_string(rs.ambient_dim()));
  RationalVector c = rs.simple_root_left_inverse() * w;
  if (rs.simple_root_matrix() * c != w)
    throw NotInRootSpan("vector " + w.str() + " is outside the root span of " + rs.label());
  return c;
}

RationalVector to_fundamental_coords(const RationalVector& w, const RootSystem& rs) {
  if (!in_root_span(w, rs))
    throw NotInRootSpan("vector " + w.str() + " is outside the weight span of " + rs.label());
  RationalVector m(static_cast<std::size_t>(rs.rank()));
  for (int i = 0; i < rs.rank(); ++i) m[static_cast<std::size_t>(i)] = rs.coroot_pairing(w, i);
  return m;
}

RationalVector from_simple_root_coords(const RationalVector& c, const RootSystem& rs) {
  return rs.simple_root_matrix() * c;
}

RationalVector from_fundamental_coords(const RationalVector& m, const RootSystem& rs) {
  return rs.fundamental_weight_matrix() * m;
}

bool in_root_span(const RationalVector& w, const RootSystem& rs) {
  if (w.dim() != rs.ambient_dim()) return false;
  return rs.simple_root_matrix() * (rs.simple_root_left_inverse() * w) == w;
}

}  // namespace weylalt
