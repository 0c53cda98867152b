#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conedens/density.hpp"
#include "conedens/setgen.hpp"
#include "reference/reference.hpp"

using namespace conedens;

TEST_CASE("classical 1D densities") {
  const Box box = Box::line(100);
  CHECK(sigma_1d(parse_and_build("odds", box, 0)).value == Rational(1, 2));
  CHECK(sigma_1d(parse_and_build("evens", box, 0)).value == 0);
  CHECK(sigma_1d(PointSet::full(box)).value == 1);
  for (int n : {1, 2, 5, 33})
    CHECK(sigma_1d(parse_and_build("evens", Box::line(n), 0)).value == 0);
}

TEST_CASE("sigma_1d witness is the first minimizing prefix") {
  const Box box = Box::line(10);
  const DensityReport rep = sigma_1d(parse_and_build("evens", box, 0));
  CHECK(rep.value == 0);
  CHECK(rep.witness.points() == std::vector<Point>{{1}});
}

TEST_CASE("family density: full cone has density one") {
  const Box box({2, 2});
  const DensityReport rep = sigma_ideal_family(PointSet::full(box));
  CHECK(rep.value == 1);
  CHECK(rep.family_size == 18);  // C(6,3) - 2
}

TEST_CASE("family density: a missing atom forces zero") {
  const Box box({1, 1});
  PointSet a = PointSet::full(box);
  a.erase({1, 0});  // drop e1
  const DensityReport rep = sigma_ideal_family(a);
  CHECK(rep.value == 0);
  CHECK(rep.witness.points() == std::vector<Point>{{1, 0}});
}

TEST_CASE("family density: cone minus the top corner of box (1,1)") {
  // the four ideals are {e2}, {e1}, {e1,e2}, {e1,e2,(1,1)} with ratios
  // 1, 1, 1, 2/3; the minimum sits at the full three-point ideal
  const Box box({1, 1});
  PointSet a = PointSet::full(box);
  a.erase({1, 1});
  const DensityReport rep = sigma_ideal_family(a);
  CHECK(rep.value == reference::sigma_brute_force(a));
  CHECK(rep.value == Rational(2, 3));
  CHECK(rep.witness.points() == std::vector<Point>{{0, 1}, {1, 0}, {1, 1}});
  CHECK(rep.family_size == 4);
}

TEST_CASE("family density matches the brute-force oracle") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Box box({2, 2 + static_cast<int>(seed % 2)});
    const PointSet a =
        random_pointset(box, Rational(1 + seed % 18, 20), seed, false);
    CHECK(sigma_ideal_family(a).value == reference::sigma_brute_force(a));
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Box box({2, 1, 1});
    const PointSet a =
        random_pointset(box, Rational(1 + seed % 18, 20), seed, false);
    CHECK(sigma_ideal_family(a).value == reference::sigma_brute_force(a));
  }
}

TEST_CASE("1D family density equals sigma_1d") {
  for (int n = 1; n <= 12; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const PointSet a =
          random_pointset(Box::line(n), Rational(1, 2), seed, false);
      const DensityReport fast = sigma_1d(a);
      const DensityReport fam = sigma_ideal_family(a);
      CHECK(fast.value == fam.value);
      CHECK(fast.witness.points() == fam.witness.points());
    }
  }
}

TEST_CASE("density is monotone and bounded") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Box box({3, 3});
    PointSet a = random_pointset(box, Rational(2, 5), seed, false);
    const Rational va = sigma_ideal_family(a).value;
    CHECK(va >= 0);
    CHECK(va <= 1);
    PointSet bigger = a;
    bigger.insert_index(1 + seed % box.cone_size());
    CHECK(va <= sigma_ideal_family(bigger).value);
  }
}

TEST_CASE("density one iff the whole boxed cone") {
  const Box box({2, 2});
  PointSet a = PointSet::full(box);
  CHECK(sigma_ideal_family(a).value == 1);
  a.erase({2, 2});
  CHECK(sigma_ideal_family(a).value < 1);
}

TEST_CASE("growing the box never increases the 1D value") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PointSet a = random_pointset(Box::line(30), Rational(3, 5), seed, true);
    const Rational v_small = sigma_1d(a, 20).value;
    const Rational v_big = sigma_1d(a, 30).value;
    CHECK(v_big <= v_small);
  }
}

TEST_CASE("positive density implies the atoms are present") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Box box({2, 3});
    const PointSet a = random_pointset(box, Rational(4, 5), seed, false);
    if (sigma_ideal_family(a).value > 0)
      for (const Point& e : atoms(2)) CHECK(a.contains(e));
  }
}

TEST_CASE("h0_for_half") {
  CHECK(h0_for_half(Rational(1)) == 1);
  CHECK(h0_for_half(Rational(1, 2)) == 1);
  CHECK(h0_for_half(Rational(1, 3)) == 2);  // (2/3)^2 = 4/9 <= 1/2 < 2/3
  CHECK(h0_for_half(Rational(1, 10)) == 7); // (9/10)^7 ~ 0.478
  CHECK_THROWS_AS(h0_for_half(Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(h0_for_half(Rational(-1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(h0_for_half(Rational(3, 2)), std::invalid_argument);
}

TEST_CASE("h0 threshold is exact") {
  // alpha = 1/3: h0 = 2, so (2/3)^1 > 1/2 and (2/3)^2 <= 1/2
  CHECK(Rational(2, 3) > Rational(1, 2));
  CHECK(Rational(4, 9) <= Rational(1, 2));
  // boundary case: exact equality counts as reaching 1/2
  CHECK(h0_for_half(Rational(1, 2)) == 1);
}

namespace {

// incremental-powers oracle for h0
int h0_naive(const Rational& alpha) {
  const Rational r = 1 - alpha;
  BigInt np = 1, dp = 1;
  for (int h = 1;; ++h) {
    np *= numerator(r);
    dp *= denominator(r);
    if (2 * np <= dp) return h;
  }
}

}  // namespace

TEST_CASE("h0 matches the incremental oracle on assorted rationals") {
  for (std::int64_t q = 2; q <= 60; ++q)
    for (std::int64_t p = 1; p <= q; p += 3)
      CHECK(h0_for_half(Rational(p, q)) == h0_naive(Rational(p, q)));
  CHECK(h0_for_half(Rational(1, 100000)) == h0_naive(Rational(1, 100000)));
  CHECK(h0_for_half(Rational(999, 1000)) == 1);
}
