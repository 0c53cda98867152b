#include "conedens/ideals.hpp"

#include <string>

#include "conedens/errors.hpp"

namespace conedens {

namespace {

// Number of downward-closed subsets (including the empty one) of the full
// grid poset, i.e. the product of chains of sizes m_i + 1.  Nonempty ideals
// of the cone are in bijection with nonempty grid down-sets minus the {0}
// singleton, hence the "- 2" applied by ideal_count.
BigInt grid_downset_count(const Box& box) {
  const auto& m = box.bounds();
  if (m.size() == 1) return BigInt(m[0]) + 2;
  if (m.size() == 2) {
    // binomial(a+b, a) with chain lengths a = m1+1, b = m2+1
    const int a = m[0] + 1, b = m[1] + 1;
    BigInt num = 1, den = 1;
    for (int i = 1; i <= a; ++i) {
      num *= b + i;
      den *= i;
    }
    return num / den;
  }
  // MacMahon's box product: plane partitions inside an a x b x c box
  const int a = m[0] + 1, b = m[1] + 1, c = m[2] + 1;
  BigInt num = 1, den = 1;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      for (int k = 1; k <= c; ++k) {
        num *= i + j + k - 1;
        den *= i + j + k - 2;
      }
  return num / den;
}

// 1D family: the ideals of a chain are exactly the prefixes {1..k}.
void walk_chain(const Box& box, std::uint64_t cap,
                std::span<const BitGrid* const> tracked,
                const std::function<bool(const IdealCursor&)>& visit) {
  const std::uint64_t n = box.cone_size();
  if (n > cap)
    throw CapExceededError("ideal family has " + std::to_string(n) +
                               " members, cap is " + std::to_string(cap),
                           cap);
  std::vector<std::uint64_t> members;
  members.reserve(n);
  std::vector<std::int64_t> counts(tracked.size(), 0);
  for (std::uint64_t k = 1; k <= n; ++k) {
    members.push_back(k);
    for (std::size_t t = 0; t < tracked.size(); ++t)
      counts[t] += tracked[t]->get(k) ? 1 : 0;
    IdealCursor cur{k - 1, k, members, counts};
    if (!visit(cur)) return;
  }
}

// General walker: backtracking over the cone points in index order (a linear
// extension of the rectangular order), exclude branch first.  A point is
// includable iff all its lower covers are currently included, which is
// decided by the time the point is reached.  Every leaf is a distinct
// down-set; the empty one is skipped.
class IdealWalker {
 public:
  IdealWalker(const Box& box, std::span<const BitGrid* const> tracked)
      : box_(box), tracked_(tracked), in_(box.volume()),
        counts_(tracked.size(), 0) {
    const std::uint64_t k = box.cone_size();
    decision_.assign(k, kUndecided);
    members_.reserve(k);
    // flatten the lower-cover lists (x - e_i inside the cone) once
    cover_off_.reserve(k + 1);
    cover_off_.push_back(0);
    for (std::uint64_t idx = 1; idx <= k; ++idx) {
      Point x = box.point_at(idx);
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        --x[i];
        if (in_cone(x)) cover_data_.push_back(box.index(x));
        ++x[i];
      }
      cover_off_.push_back(cover_data_.size());
    }
  }

  void run(std::uint64_t cap, std::optional<BigInt> known_count,
           const std::function<bool(const IdealCursor&)>& visit) {
    if (known_count && *known_count > cap)
      throw CapExceededError("ideal family has " + known_count->str() +
                                 " members, cap is " + std::to_string(cap),
                             cap);
    const std::uint64_t k = box_.cone_size();
    std::uint64_t ordinal = 0;
    std::uint64_t pos = 0;
    for (;;) {
      // advance: decide remaining positions, exclude-first
      while (pos < k) {
        decision_[pos] = includable(pos + 1) ? kExcluded : kForcedOut;
        ++pos;
      }
      if (!members_.empty()) {
        if (!known_count && ordinal >= cap)
          throw CapExceededError(
              "ideal enumeration exceeded cap " + std::to_string(cap), cap);
        IdealCursor cur{ordinal, members_.size(), members_, counts_};
        ++ordinal;
        if (!visit(cur)) return;
      }
      // backtrack to the last flippable exclude
      for (;;) {
        if (pos == 0) return;
        --pos;
        if (decision_[pos] == kIncluded) {
          drop(pos + 1);
          decision_[pos] = kUndecided;
        } else if (decision_[pos] == kExcluded) {
          decision_[pos] = kIncluded;
          take(pos + 1);
          ++pos;
          break;
        } else {
          decision_[pos] = kUndecided;
        }
      }
    }
  }

 private:
  static constexpr std::int8_t kUndecided = -1;
  static constexpr std::int8_t kExcluded = 0;
  static constexpr std::int8_t kIncluded = 1;
  static constexpr std::int8_t kForcedOut = 2;  // some lower cover missing

  bool includable(std::uint64_t idx) const {
    for (std::size_t c = cover_off_[idx - 1]; c < cover_off_[idx]; ++c)
      if (!in_.get(cover_data_[c])) return false;
    return true;
  }

  void take(std::uint64_t idx) {
    in_.set(idx);
    members_.push_back(idx);
    for (std::size_t t = 0; t < tracked_.size(); ++t)
      counts_[t] += tracked_[t]->get(idx) ? 1 : 0;
  }

  void drop(std::uint64_t idx) {
    in_.reset(idx);
    members_.pop_back();
    for (std::size_t t = 0; t < tracked_.size(); ++t)
      counts_[t] -= tracked_[t]->get(idx) ? 1 : 0;
  }

  const Box& box_;
  std::span<const BitGrid* const> tracked_;
  BitGrid in_;
  std::vector<std::int64_t> counts_;
  std::vector<std::uint64_t> members_;
  std::vector<std::int8_t> decision_;
  std::vector<std::uint64_t> cover_data_;
  std::vector<std::size_t> cover_off_;
};

}  // namespace

std::optional<BigInt> ideal_count(const Box& box) {
  if (box.dim() > 3) return std::nullopt;
  return grid_downset_count(box) - 2;
}

void for_each_ideal(const Box& box, std::uint64_t cap,
                    std::span<const BitGrid* const> tracked,
                    const std::function<bool(const IdealCursor&)>& visit) {
  if (box.dim() == 1) {
    walk_chain(box, cap, tracked, visit);
    return;
  }
  IdealWalker walker(box, tracked);
  walker.run(cap, ideal_count(box), visit);
}

std::vector<OrderIdeal> enumerate_ideals(const Box& box, std::uint64_t cap) {
  std::vector<OrderIdeal> out;
  for_each_ideal(box, cap, {}, [&](const IdealCursor& cur) {
    std::vector<Point> pts;
    pts.reserve(cur.members.size());
    for (std::uint64_t idx : cur.members) pts.push_back(box.point_at(idx));
    out.push_back(OrderIdeal::unchecked(std::move(pts)));
    return true;
  });
  return out;
}

}  // namespace conedens
