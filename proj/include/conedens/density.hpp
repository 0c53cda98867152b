#pragma once

#include <cstdint>

#include "conedens/ideals.hpp"
#include "conedens/order.hpp"
#include "conedens/pointset.hpp"
#include "conedens/rational.hpp"

namespace conedens {

// Exact minimum of |A ∩ J| / |J| over the box-restricted ideal family,
// with the first minimizing ideal (in enumeration order) as witness.
// Box-relative by construction: growing the box can only lower the value.
struct DensityReport {
  Rational value;
  OrderIdeal witness;
  std::uint64_t family_size;
  Box box;
};

// 1D density: min over prefixes {1..n}, n = 1..n_max, of A(n)/n.  An upper
// bound on the infimum over all of N.  n_max defaults to the box bound.
DensityReport sigma_1d(const PointSet& a, int n_max = 0);

// Generalized density over all nonempty downward-closed subsets of the boxed
// cone.  For n = 1 this coincides with sigma_1d.
DensityReport sigma_ideal_family(const PointSet& a,
                                 std::uint64_t cap = kDefaultIdealCap);

// Least h >= 1 with 1 - (1-alpha)^h >= 1/2, in exact arithmetic.
// Requires 0 < alpha <= 1.
int h0_for_half(const Rational& alpha);

}  // namespace conedens
