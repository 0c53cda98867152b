#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "conedens/errors.hpp"
#include "conedens/ideals.hpp"
#include "reference/reference.hpp"

using namespace conedens;

namespace {

std::vector<std::vector<Point>> keys(const std::vector<OrderIdeal>& v) {
  std::vector<std::vector<Point>> out;
  for (const auto& j : v) out.push_back(j.points());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("1D ideals are the prefixes") {
  for (int n = 1; n <= 10; ++n) {
    const Box box = Box::line(n);
    const auto fam = enumerate_ideals(box);
    REQUIRE(fam.size() == static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
      std::vector<Point> prefix;
      for (int v = 1; v <= k; ++v) prefix.push_back({v});
      CHECK(fam[static_cast<std::size_t>(k - 1)].points() == prefix);
    }
    // oracle: exhaustive subset filter
    CHECK(keys(fam) == keys(reference::ideals_brute_force(box)));
  }
}

TEST_CASE("2D box (1,1) has exactly the four known ideals") {
  const auto fam = enumerate_ideals(Box({1, 1}));
  const auto got = keys(fam);
  std::vector<std::vector<Point>> expect = {
      {{0, 1}},
      {{1, 0}},
      {{0, 1}, {1, 0}},
      {{0, 1}, {1, 0}, {1, 1}},
  };
  std::sort(expect.begin(), expect.end());
  CHECK(got == expect);
}

TEST_CASE("enumeration equals brute-force subset filter") {
  for (const Box& box :
       {Box({2, 2}), Box({3, 2}), Box({1, 4}), Box({1, 1, 1}), Box({2, 1, 1})}) {
    const auto fam = enumerate_ideals(box);
    for (const auto& j : fam) CHECK(is_downward_closed(j.points()));
    CHECK(keys(fam) == keys(reference::ideals_brute_force(box)));
  }
}

TEST_CASE("closed-form ideal counts match brute force") {
  for (const Box& box : {Box({1}), Box({7}), Box({1, 1}), Box({2, 2}), Box({3, 2}),
                         Box({1, 4}), Box({1, 1, 1}), Box({2, 1, 1}), Box({2, 2, 1})}) {
    const auto counted = ideal_count(box);
    REQUIRE(counted.has_value());
    CHECK(*counted == BigInt(reference::downset_count_brute_force(box)) - 1);
    CHECK(*counted == BigInt(enumerate_ideals(box).size()));
  }
  CHECK_FALSE(ideal_count(Box({1, 1, 1, 1})).has_value());
}

TEST_CASE("enumeration is deterministic") {
  const Box box({2, 2});
  const auto a = enumerate_ideals(box);
  const auto b = enumerate_ideals(box);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].points() == b[i].points());
}

TEST_CASE("cap errors before enumeration when the count is known") {
  const Box box({4, 4});  // C(10,5) - 2 = 250 ideals
  std::uint64_t visited = 0;
  CHECK_THROWS_AS(
      for_each_ideal(box, 10, {},
                     [&](const IdealCursor&) {
                       ++visited;
                       return true;
                     }),
      CapExceededError);
  CHECK(visited == 0);  // pre-count, not mid-walk abort
  CHECK(enumerate_ideals(box, 250).size() == 250);
}

TEST_CASE("cap errors during enumeration when no closed form exists") {
  const Box box({1, 1, 1, 1});
  std::uint64_t visited = 0;
  CHECK_THROWS_AS(
      for_each_ideal(box, 5, {},
                     [&](const IdealCursor&) {
                       ++visited;
                       return true;
                     }),
      CapExceededError);
  CHECK(visited == 5);
}

TEST_CASE("walker supports n >= 4") {
  // 4D cone of box (1,1,1,1): ideals of the 4-cube poset minus the bottom
  const auto fam = enumerate_ideals(Box({1, 1, 1, 1}));
  std::vector<OrderIdeal> slow = reference::ideals_brute_force(Box({1, 1, 1, 1}));
  CHECK(keys(fam) == keys(slow));
}

TEST_CASE("early stop") {
  std::uint64_t visited = 0;
  for_each_ideal(Box({3, 3}), kDefaultIdealCap, {}, [&](const IdealCursor& cur) {
    ++visited;
    return cur.ordinal < 4;
  });
  CHECK(visited == 5);
}

TEST_CASE("tracked counts are exact intersection sizes") {
  const Box box({2, 2});
  BitGrid a(box.volume());
  a.set(box.index({1, 0}));
  a.set(box.index({2, 2}));
  const BitGrid* tracked[] = {&a};
  for_each_ideal(box, kDefaultIdealCap, tracked, [&](const IdealCursor& cur) {
    std::int64_t expect = 0;
    for (std::uint64_t idx : cur.members)
      if (a.get(idx)) ++expect;
    CHECK(cur.tracked_counts[0] == expect);
    CHECK(cur.size == cur.members.size());
    return true;
  });
}
