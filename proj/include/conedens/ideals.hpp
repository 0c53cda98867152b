#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "conedens/bitgrid.hpp"
#include "conedens/order.hpp"
#include "conedens/point.hpp"
#include "conedens/rational.hpp"

namespace conedens {

inline constexpr std::uint64_t kDefaultIdealCap = 1'000'000;

// View of the ideal currently held by the family walker.  Valid only inside
// the visit callback.
struct IdealCursor {
  std::uint64_t ordinal;                          // 0-based position in enumeration order
  std::uint64_t size;                             // |J|
  std::span<const std::uint64_t> members;         // ascending linear indices
  std::span<const std::int64_t> tracked_counts;   // |T_k ∩ J| per tracked grid
};

// Exact number of nonempty downward-closed subsets of the boxed cone.
// Closed forms exist for n <= 3 (chain / binomial / MacMahon box product);
// nullopt for higher dimensions.
std::optional<BigInt> ideal_count(const Box& box);

// Visits every nonempty downward-closed subset of the boxed cone exactly
// once, in a fixed deterministic order.  The visitor may return false to stop
// early.  Throws CapExceededError if the family is larger than cap: before
// walking when a closed-form count is available, otherwise on the cap+1-th
// ideal.
void for_each_ideal(const Box& box, std::uint64_t cap,
                    std::span<const BitGrid* const> tracked,
                    const std::function<bool(const IdealCursor&)>& visit);

// Materialized family, for small boxes and tests.
std::vector<OrderIdeal> enumerate_ideals(const Box& box,
                                         std::uint64_t cap = kDefaultIdealCap);

}  // namespace conedens
