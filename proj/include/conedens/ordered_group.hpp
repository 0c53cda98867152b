#pragma once

#include <concepts>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "conedens/order.hpp"
#include "conedens/point.hpp"

namespace conedens {

// Multiplication side for the group-generic constructions.  In a right
// partially ordered group the partition translates are J_l * b_l^{-1}; in a
// left one they are b_l^{-1} * J_l.  The two coincide in the abelian case.
enum class GroupSide { right, left };

// Interface the group-generic theorem cores are written against: identity,
// operation, inverse, the partial order, and a finite enumerator of the open
// interval (e, x).  Ships with the abelian lattice instance below; a
// nonabelian instance with finite intervals plugs in here.
template <class G>
concept PartiallyOrderedGroup =
    requires(const G& g, const typename G::Element& a, const typename G::Element& b) {
      { g.identity() } -> std::convertible_to<typename G::Element>;
      { g.op(a, b) } -> std::convertible_to<typename G::Element>;
      { g.inverse(a) } -> std::convertible_to<typename G::Element>;
      { g.leq(a, b) } -> std::convertible_to<bool>;
      { g.interval_below(a) } -> std::convertible_to<std::vector<typename G::Element>>;
    };

// Z^n under addition with the rectangular order.
class LatticeCone {
 public:
  using Element = Point;

  explicit LatticeCone(int n) : n_(n) {}

  Point identity() const { return Point(static_cast<std::size_t>(n_), 0); }
  Point op(const Point& a, const Point& b) const { return point_add(a, b); }
  Point inverse(const Point& a) const {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
  }
  bool leq(const Point& a, const Point& b) const { return leq_rect(a, b); }
  std::vector<Point> interval_below(const Point& x) const {
    return open_interval_below(x);
  }

 private:
  int n_;
};

template <class El>
struct GroupPart {
  El anchor;                // b_l in B
  std::vector<El> members;  // J_l, in input order
};

// The partition construction: groups J* = J \ B by the tot-maximum b*(x) of
// B ∩ (e, x).  `tot_less` must be a total order extending g.leq; `in_b`
// decides membership in B.  Returns nullopt carrying the offending x via
// `failed_at` when some B ∩ (e, x) is empty.
template <PartiallyOrderedGroup G>
std::optional<std::vector<GroupPart<typename G::Element>>> partition_by_max_anchor(
    const G& g, const std::vector<typename G::Element>& j_star,
    const std::function<bool(const typename G::Element&)>& in_b,
    const std::function<bool(const typename G::Element&, const typename G::Element&)>&
        tot_less,
    typename G::Element* failed_at = nullptr) {
  using El = typename G::Element;
  std::map<El, std::vector<El>> groups;
  for (const El& x : j_star) {
    const El* best = nullptr;
    std::vector<El> interval = g.interval_below(x);
    for (const El& z : interval) {
      if (!in_b(z)) continue;
      if (!best || tot_less(*best, z)) best = &z;
    }
    if (!best) {
      if (failed_at) *failed_at = x;
      return std::nullopt;
    }
    groups[*best].push_back(x);
  }
  std::vector<GroupPart<El>> parts;
  parts.reserve(groups.size());
  for (auto& [anchor, members] : groups)
    parts.push_back(GroupPart<El>{anchor, std::move(members)});
  return parts;
}

// Translate of a part: J_l * b_l^{-1} (right) or b_l^{-1} * J_l (left).
template <PartiallyOrderedGroup G>
std::vector<typename G::Element> part_translate(const G& g,
                                                const GroupPart<typename G::Element>& part,
                                                GroupSide side) {
  std::vector<typename G::Element> out;
  out.reserve(part.members.size());
  const auto binv = g.inverse(part.anchor);
  for (const auto& x : part.members)
    out.push_back(side == GroupSide::right ? g.op(x, binv) : g.op(binv, x));
  return out;
}

// The pigeonhole pair: a in A∩J, b in B∩J with op(a, b) = x, J = (e, x).
// Scans the interval for a and solves x = a * b, i.e. b = a^{-1} * x.
template <PartiallyOrderedGroup G>
std::optional<std::pair<typename G::Element, typename G::Element>> pigeonhole_pair(
    const G& g, const typename G::Element& x,
    const std::function<bool(const typename G::Element&)>& in_a,
    const std::function<bool(const typename G::Element&)>& in_b) {
  for (const auto& a : g.interval_below(x)) {
    if (!in_a(a)) continue;
    const auto b = g.op(g.inverse(a), x);
    if (in_b(b)) return std::make_pair(a, b);
  }
  return std::nullopt;
}

}  // namespace conedens
