#pragma once

// Coordinate changes between the ambient e-basis, the simple-root basis
// and the fundamental-weight basis of a root system.

#include "weylalt/rational.hpp"

namespace weylalt {

class RootSystem;

/// c with w = sum c_i alpha_i. Throws NotInRootSpan when w is outside the
/// span of the simple roots.
RationalVector to_simple_root_coords(const RationalVector& w, const RootSystem& rs);

/// m with w = sum m_i varpi_i. Throws NotInRootSpan as above.
RationalVector to_fundamental_coords(const RationalVector& w, const RootSystem& rs);

RationalVector from_simple_root_coords(const RationalVector& c, const RootSystem& rs);
RationalVector from_fundamental_coords(const RationalVector& m, const RootSystem& rs);

/// True iff w lies in the rational span of the simple roots.
bool in_root_span(const RationalVector& w, const RootSystem& rs);

}  // namespace weylalt
