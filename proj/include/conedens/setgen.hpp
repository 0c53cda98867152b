#pragma once

#include <cstdint>
#include <string>

#include "conedens/pointset.hpp"
#include "conedens/rational.hpp"

namespace conedens {

// Tiny set-description DSL.  Resolution is deterministic in (spec, box, seed).
//
//   1D:  odds | evens | full | primes | squares | powers:k
//        | list:a,b,c | file:PATH | random:p=P[,atoms=yes]
//   nD:  full | prod(S1;...;Sn) | list:(x1,y1)(x2,y2)... | file:PATH
//        | random:p=P[,atoms=yes]   (random(p=P[,atoms=yes]) also accepted)
//
// powers:k means k-th powers 1, 2^k, 3^k, ...; P is a rational like 1/2 or a
// decimal like 0.5; atoms=yes forces every unit vector into a random set.
PointSet parse_and_build(const std::string& spec, const Box& box,
                         std::uint64_t seed);

// Independent Bernoulli(p) membership per cone point, visited in index order.
// Draws come from std::mt19937_64(seed); a point is kept iff the next 64-bit
// draw is below floor(p * 2^64).  Reproducible across platforms.
PointSet random_pointset(const Box& box, const Rational& p, std::uint64_t seed,
                         bool force_atoms);

// Per-instance seed derivation for randomized suites.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t instance);

}  // namespace conedens
