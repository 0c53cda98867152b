#pragma once

// Serial reference implementations: the ground truth the fast kernels are
// tested and benchmarked against.  Deliberately naive; not part of the
// library API.

#include <cstdint>
#include <vector>

#include "conedens/order.hpp"
#include "conedens/pointset.hpp"
#include "conedens/rational.hpp"

namespace conedens::reference {

// Sparse double loop over (A ∪ {0}) x (B ∪ {0}), dropping sums that leave
// the box and the zero vector.
PointSet sumset_naive(const PointSet& a, const PointSet& b);

PointSet hfold_naive(const PointSet& a, int h);

// Every nonempty downward-closed subset of the boxed cone, found by testing
// all 2^k subsets.  Keep the cone below ~25 points.
std::vector<OrderIdeal> ideals_brute_force(const Box& box);

// Number of downward-closed subsets of the boxed cone including the empty
// one, by the same filter.
std::uint64_t downset_count_brute_force(const Box& box);

// min |A ∩ J| / |J| over the brute-force family.
Rational sigma_brute_force(const PointSet& a);

std::vector<int> primes_trial_division(int n_max);
std::vector<int> squares_by_root(int n_max);

}  // namespace conedens::reference
