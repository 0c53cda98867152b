#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "conedens/pointset.hpp"
#include "conedens/setgen.hpp"
#include "reference/reference.hpp"

using namespace conedens;

namespace {

PointSet odds_1d(int n_max) {
  PointSet s(Box::line(n_max));
  for (int v = 1; v <= n_max; v += 2) s.insert({v});
  return s;
}

}  // namespace

TEST_CASE("bitgrid shifted-or against a per-bit reference") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 300; ++it) {
    const std::uint64_t n = 40 + rng() % 300;
    BitGrid src(n), dst(n), expect(n);
    for (std::uint64_t i = 0; i < n; ++i)
      if (rng() % 2) src.set(i);
    for (std::uint64_t i = 0; i < n; ++i)
      if (rng() % 4 == 0) {
        dst.set(i);
        expect.set(i);
      }
    const std::uint64_t src_begin = rng() % n;
    const std::uint64_t max_len = n - src_begin;
    const std::uint64_t dst_begin = rng() % n;
    const std::uint64_t len =
        std::min(max_len, n - dst_begin) > 0
            ? rng() % std::min(max_len, n - dst_begin) + 1
            : 0;
    dst.or_shifted_range(src, src_begin, len, dst_begin);
    for (std::uint64_t k = 0; k < len; ++k)
      if (src.get(src_begin + k)) expect.set(dst_begin + k);
    CHECK(dst == expect);
    CHECK(dst.count() == expect.count());
  }
}

TEST_CASE("dense and sparse views agree") {
  const Box box({3, 3});
  const PointSet s = random_pointset(box, Rational(1, 2), 12, false);
  const auto pts = s.points();
  CHECK(pts.size() == s.cardinality());
  for (const Point& p : pts) CHECK(s.contains(p));
  CHECK(s.indices().size() == s.cardinality());
}

TEST_CASE("pointset basics") {
  const Box box({3, 3});
  PointSet s(box);
  CHECK(s.empty());
  s.insert({1, 2});
  CHECK(s.contains({1, 2}));
  CHECK(s.cardinality() == 1);
  CHECK_THROWS_AS(s.insert({0, 0}), std::invalid_argument);  // zero vector
  CHECK_THROWS_AS(s.insert({4, 0}), std::invalid_argument);  // outside box
  CHECK(PointSet::full(box).cardinality() == box.cone_size());
  CHECK(s.points() == std::vector<Point>{{1, 2}});
}

TEST_CASE("sumset: direct expansion of the definition") {
  const Box box = Box::line(8);
  const PointSet a = PointSet::of(box, {{1}, {2}});
  const PointSet b = PointSet::of(box, {{1}});
  CHECK(sumset(a, b).points() == std::vector<Point>{{1}, {2}, {3}});
}

TEST_CASE("sumset with the empty set is the identity") {
  const PointSet a = odds_1d(16);
  const PointSet empty(Box::line(16));
  CHECK(sumset(a, empty) == a);
  CHECK(sumset(empty, a) == a);
}

TEST_CASE("odds + odds covers the whole box") {
  const PointSet a = odds_1d(16);
  const PointSet c = sumset(a, a);
  CHECK(c == PointSet::full(Box::line(16)));
  CHECK(c == reference::sumset_naive(a, a));
}

TEST_CASE("box mismatch is an error") {
  CHECK_THROWS_AS(sumset(PointSet(Box::line(4)), PointSet(Box::line(5))),
                  std::invalid_argument);
}

TEST_CASE("hfold") {
  const PointSet a = odds_1d(32);
  CHECK(hfold(a, 1) == a);
  CHECK(hfold(a, 2) == PointSet::full(Box::line(32)));
  CHECK(hfold(a, 2) == reference::hfold_naive(a, 2));
  CHECK_THROWS_AS(hfold(a, 0), std::invalid_argument);
}

TEST_CASE("hfold is monotone in h") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Box box = Box::line(24);
    const PointSet a = random_pointset(box, Rational(1, 3), seed, false);
    PointSet prev = hfold(a, 1);
    for (int h = 2; h <= 4; ++h) {
      const PointSet cur = hfold(a, h);
      CHECK(prev.is_subset_of(cur));
      prev = cur;
    }
  }
}

TEST_CASE("counting function") {
  const PointSet odds = odds_1d(16);
  CHECK(counting_function(odds, {10}) == 5);
  CHECK(counting_function(PointSet(Box::line(16)), {10}) == 0);
  PointSet evens(Box::line(16));
  for (int v = 2; v <= 16; v += 2) evens.insert({v});
  CHECK(counting_function(evens, {1}) == 0);
  CHECK_THROWS_AS(counting_function(odds, {17}), std::invalid_argument);
}

TEST_CASE("counting function in 2D") {
  const Box box({3, 3});
  const PointSet s = PointSet::of(box, {{1, 0}, {0, 1}, {2, 2}, {3, 1}});
  CHECK(counting_function(s, {2, 2}) == 3);
  CHECK(counting_function(s, {0, 1}) == 1);
}

TEST_CASE("kernel equals naive oracle on random pairs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Box box = Box::line(1 + static_cast<int>(seed % 7) * 9 + 8);
    const PointSet a = random_pointset(box, Rational(1, 3), seed * 2 + 1, false);
    const PointSet b = random_pointset(box, Rational(2, 3), seed * 2 + 2, false);
    CHECK(sumset(a, b) == reference::sumset_naive(a, b));
  }
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Box box({2 + static_cast<int>(seed % 4), 3, (seed % 2) ? 2 : 4});
    const PointSet a = random_pointset(box, Rational(1, 4), seed * 2 + 1, false);
    const PointSet b = random_pointset(box, Rational(1, 2), seed * 2 + 2, false);
    CHECK(sumset(a, b) == reference::sumset_naive(a, b));
  }
}

TEST_CASE("A and B embed into A + B") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Box box({4, 4});
    const PointSet a = random_pointset(box, Rational(1, 2), seed * 2 + 1, false);
    const PointSet b = random_pointset(box, Rational(1, 2), seed * 2 + 2, false);
    const PointSet c = sumset(a, b);
    CHECK(a.is_subset_of(c));
    CHECK(b.is_subset_of(c));
  }
}

TEST_CASE("sumset is commutative and associative") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Box box({3, 4});
    const PointSet a = random_pointset(box, Rational(2, 5), seed * 3 + 1, false);
    const PointSet b = random_pointset(box, Rational(2, 5), seed * 3 + 2, false);
    const PointSet c = random_pointset(box, Rational(2, 5), seed * 3 + 3, false);
    CHECK(sumset(a, b) == sumset(b, a));
    CHECK(sumset(sumset(a, b), c) == sumset(a, sumset(b, c)));
  }
}

TEST_CASE("sumset is monotone") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Box box = Box::line(40);
    const PointSet a = random_pointset(box, Rational(1, 3), seed * 2 + 1, false);
    PointSet bigger = a;
    bigger.insert_index(1 + seed % box.cone_size());
    const PointSet b = random_pointset(box, Rational(1, 3), seed * 2 + 2, false);
    CHECK(sumset(a, b).is_subset_of(sumset(bigger, b)));
  }
}
