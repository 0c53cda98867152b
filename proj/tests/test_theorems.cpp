#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "conedens/errors.hpp"
#include "conedens/setgen.hpp"
#include "conedens/theorems.hpp"
#include "reference/reference.hpp"

using namespace conedens;

namespace {

PointSet named(const std::string& spec, const Box& box) {
  return parse_and_build(spec, box, 0);
}

}  // namespace

// ---------------------------------------------------------------------------
// pigeonhole, 1D

TEST_CASE("1D pigeonhole: odds + odds decomposes 2 as 1 + 1") {
  const Box box = Box::line(16);
  const PointSet odds = named("odds", box);
  const Decomposition d = pigeonhole_decompose_1d(odds, odds, 2);
  CHECK(d.a == Point{1});
  CHECK(d.b == Point{1});
  CHECK_FALSE(d.direct);
}

TEST_CASE("1D pigeonhole: members are covered directly") {
  const Box box = Box::line(16);
  const PointSet odds = named("odds", box);
  const Decomposition d = pigeonhole_decompose_1d(odds, odds, 7);
  CHECK(d.direct);
  CHECK(d.a == Point{7});
  CHECK(d.b == Point{0});
}

TEST_CASE("1D pigeonhole: dense sets decompose everything") {
  const Box box = Box::line(20);
  const PointSet full = PointSet::full(box);
  for (int x = 1; x <= 20; ++x) {
    const Decomposition d = pigeonhole_decompose_1d(full, full, x);
    CHECK(d.a[0] + d.b[0] == x);
  }
}

TEST_CASE("1D pigeonhole: hypothesis gate") {
  const Box box = Box::line(16);
  const PointSet evens = named("evens", box);
  CHECK_THROWS_AS(pigeonhole_decompose_1d(evens, evens, 4), HypothesisError);
  CHECK_THROWS_AS(pigeonhole_decompose_1d(evens, evens, 99), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// pigeonhole, general dimension

TEST_CASE("nD pigeonhole: dense sets decompose (1,1)") {
  const Box box({2, 2});
  const PointSet full = PointSet::full(box);
  const Decomposition d = pigeonhole_decompose(full, full, {1, 1});
  const bool v1 = d.a == Point{1, 0} && d.b == Point{0, 1};
  const bool v2 = d.a == Point{0, 1} && d.b == Point{1, 0};
  CHECK((v1 || v2));
}

TEST_CASE("nD pigeonhole: atoms are rejected") {
  const Box box({2, 2});
  const PointSet full = PointSet::full(box);
  CHECK_THROWS_AS(pigeonhole_decompose(full, full, {1, 0}), HypothesisError);
}

TEST_CASE("nD pigeonhole: strict density gate") {
  const Box box({2, 2});
  PointSet a = PointSet::full(box);
  a.erase({2, 2});  // sigma(a) < 1, sum with empty-ish b is not > 1
  const PointSet b(box);
  CHECK_THROWS_AS(pigeonhole_decompose(a, b, {1, 1}), HypothesisError);
}

TEST_CASE("nD pigeonhole: random dense pairs decompose every non-atom") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Box box({3, 3});
    PointSet a = PointSet::full(box);
    PointSet b = PointSet::full(box);
    std::mt19937_64 rng(seed);
    a.erase(box.point_at(1 + rng() % box.cone_size()));
    b.erase(box.point_at(1 + rng() % box.cone_size()));
    const Rational sum =
        sigma_ideal_family(a).value + sigma_ideal_family(b).value;
    if (sum <= 1) continue;
    for (std::uint64_t idx = 1; idx < box.volume(); ++idx) {
      const Point x = box.point_at(idx);
      if (open_interval_below(x).empty()) continue;
      const Decomposition d = pigeonhole_decompose(a, b, x);
      CHECK(point_add(d.a, d.b) == x);
      CHECK(a.contains(d.a));
      CHECK(b.contains(d.b));
    }
  }
}

// ---------------------------------------------------------------------------
// cover

TEST_CASE("cover: dense sets cover the cone") {
  const Box box({2, 2});
  const CoverReport rep = cover_check(PointSet::full(box), PointSet::full(box));
  CHECK(rep.verdict == Verdict::holds);
  CHECK(rep.missing.empty());
}

TEST_CASE("cover: missing atoms are a hypothesis failure, not a violation") {
  const Box box({2, 2});
  PointSet a = PointSet::full(box);
  a.erase({0, 1});
  PointSet b = PointSet::full(box);
  b.erase({0, 1});
  const CoverReport rep = cover_check(a, b);
  CHECK(rep.verdict == Verdict::hypothesis_not_met);
  CHECK_FALSE(rep.atoms_present);
}

TEST_CASE("cover: 1D instance with positive densities") {
  const Box box = Box::line(24);
  const PointSet full = PointSet::full(box);
  const PointSet odds = named("odds", box);
  const CoverReport rep = cover_check(odds, full);
  CHECK(rep.verdict == Verdict::holds);
}

// ---------------------------------------------------------------------------
// partition

TEST_CASE("partition: the 1D worked example") {
  const Box box = Box::line(8);
  const OrderIdeal j = downward_closure(std::vector<Point>{{5}});
  const PointSet b = PointSet::of(box, {{1}, {3}});
  const PartitionCertificate cert =
      partition_j_star(j, b, ConeContext{1, ExtensionRule::lexicographic});

  REQUIRE(cert.parts.size() == 2);
  CHECK(cert.parts[0].anchor == Point{1});
  CHECK(cert.parts[0].members == std::vector<Point>{{2}});
  CHECK(cert.parts[1].anchor == Point{3});
  CHECK(cert.parts[1].members == std::vector<Point>{{4}, {5}});
  CHECK(cert.check().empty());
}

TEST_CASE("partition: J contained in B is a hypothesis failure") {
  const Box box = Box::line(8);
  const OrderIdeal j = downward_closure(std::vector<Point>{{3}});
  const PointSet b = PointSet::of(box, {{1}, {2}, {3}});
  CHECK_THROWS_AS(partition_j_star(j, b, ConeContext{1}), HypothesisError);
}

TEST_CASE("partition: empty B*(x) is a hypothesis failure naming x") {
  const Box box = Box::line(8);
  const OrderIdeal j = downward_closure(std::vector<Point>{{3}});
  const PointSet b = PointSet::of(box, {{5}});
  try {
    partition_j_star(j, b, ConeContext{1});
    FAIL("expected HypothesisError");
  } catch (const HypothesisError& e) {
    CHECK(std::string(e.what()).find("(1)") != std::string::npos);
  }
}

TEST_CASE("partition: 2D example with the lex extension") {
  const Box box({2, 2});
  const OrderIdeal j = downward_closure(std::vector<Point>{{1, 1}});
  const PointSet b = PointSet::of(box, {{1, 0}, {0, 1}});
  const PartitionCertificate cert =
      partition_j_star(j, b, ConeContext{2, ExtensionRule::lexicographic});
  // J* = {(1,1)}; B*((1,1)) = {e1, e2}; e1 is the lex maximum
  REQUIRE(cert.parts.size() == 1);
  CHECK(cert.parts[0].anchor == Point{1, 0});
  CHECK(cert.parts[0].members == std::vector<Point>{{1, 1}});
  CHECK(cert.check().empty());
}

TEST_CASE("partition: randomized certificates hold under both extension rules") {
  for (ExtensionRule rule : {ExtensionRule::lexicographic, ExtensionRule::topo_sort}) {
    int done = 0;
    for (std::uint64_t seed = 0; done < 40; ++seed) {
      REQUIRE(seed < 4000);
      std::mt19937_64 rng(derive_seed(777, seed));
      const int n = 1 + static_cast<int>(seed % 3);
      const Box box = n == 1 ? Box::line(12) : n == 2 ? Box({3, 3}) : Box({2, 2, 2});
      PointSet seeds = random_pointset(box, Rational(1, 3), rng(), false);
      if (seeds.empty()) seeds.insert_index(1 + rng() % box.cone_size());
      const OrderIdeal j = downward_closure(seeds.points());
      const PointSet b = random_pointset(box, Rational(1, 2), rng(), true);
      bool nonempty = false;
      for (const Point& x : j.points())
        if (!b.contains(x)) nonempty = true;
      if (!nonempty) continue;
      const PartitionCertificate cert = partition_j_star(j, b, ConeContext{n, rule});
      CHECK(cert.check().empty());
      ++done;
    }
  }
}

TEST_CASE("partition certificates reconstruct the counting argument") {
  // For C = A + B and any family ideal J: translating A ∩ (J_l - b_l) by b_l
  // lands inside C ∩ J_l, and the parts are disjoint from B ∩ J, so
  // |C ∩ J| >= |B ∩ J| + sum_l |A ∩ (J_l - b_l)|.
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Box box({3, 3});
    const PointSet a =
        random_pointset(box, Rational(2, 5), derive_seed(90, seed * 2), false);
    const PointSet b =
        random_pointset(box, Rational(2, 5), derive_seed(90, seed * 2 + 1), true);
    const PointSet c = sumset(a, b);
    for (const OrderIdeal& j : enumerate_ideals(box)) {
      std::int64_t b_count = 0, c_count = 0;
      bool j_star_empty = true;
      for (const Point& x : j.points()) {
        if (b.contains(x)) ++b_count;
        else j_star_empty = false;
        if (c.contains(x)) ++c_count;
      }
      if (j_star_empty) continue;
      const PartitionCertificate cert =
          partition_j_star(j, b, ConeContext{2, ExtensionRule::lexicographic});
      std::int64_t translated_a = 0;
      for (const auto& part : cert.parts)
        for (const Point& x : part.members)
          if (a.contains(point_sub(x, part.anchor))) ++translated_a;
      CHECK(c_count >= b_count + translated_a);
    }
  }
}

// ---------------------------------------------------------------------------
// inequalities

TEST_CASE("shnirelman: odds/odds at N = 16") {
  const Box box = Box::line(16);
  const PointSet odds = named("odds", box);
  const InequalityReport rep = verify_shnirelman(odds, odds);
  CHECK(rep.alpha == Rational(1, 2));
  CHECK(rep.beta == Rational(1, 2));
  CHECK(rep.bound == Rational(3, 4));
  CHECK(rep.sigma_c == 1);
  CHECK(rep.verdict == Verdict::holds);
}

TEST_CASE("shnirelman: beta = 0 reduces the bound to alpha") {
  const Box box({2, 2});
  const PointSet a = PointSet::full(box);
  PointSet b = PointSet::full(box);
  b.erase({0, 1});  // beta = 0
  const InequalityReport rep = verify_shnirelman(a, b);
  CHECK(rep.beta == 0);
  CHECK(rep.bound == rep.alpha);
  CHECK(rep.verdict == Verdict::holds);
}

TEST_CASE("shnirelman: full cone on both sides") {
  const Box box({3, 2});
  const InequalityReport rep =
      verify_shnirelman(PointSet::full(box), PointSet::full(box));
  CHECK(rep.bound == 1);
  CHECK(rep.sigma_c == 1);
  CHECK(rep.verdict == Verdict::holds);
}

TEST_CASE("shnirelman: captured per-ideal margins are all nonnegative") {
  const Box box({2, 2});
  const PointSet a = random_pointset(box, Rational(1, 2), 3, true);
  const PointSet b = random_pointset(box, Rational(1, 2), 4, false);
  const InequalityReport rep = verify_shnirelman(a, b, kDefaultIdealCap, 1000);
  CHECK(rep.margins_complete);
  CHECK(rep.margins.size() == rep.family_size);
  Rational least = 1;
  for (const auto& m : rep.margins) {
    CHECK(m.margin >= 0);
    least = std::min(least, m.margin);
  }
  CHECK(least == rep.min_margin);
}

TEST_CASE("product bound: h = 2 is the shnirelman identity") {
  const Box box = Box::line(24);
  const PointSet a = random_pointset(box, Rational(2, 5), 5, true);
  const PointSet b = random_pointset(box, Rational(3, 5), 6, true);
  const InequalityReport sh = verify_shnirelman(a, b);
  const PointSet sets[] = {a, b};
  const ProductBoundReport pr = verify_product_bound(sets);
  CHECK(pr.rhs == (1 - sh.alpha) * (1 - sh.beta));
  CHECK(pr.rhs == 1 - sh.bound);  // 1 - (a + b - ab) = (1-a)(1-b)
  CHECK(pr.verdict == Verdict::holds);
}

TEST_CASE("product bound: full cones give 0 <= 0") {
  const Box box({2, 2});
  const PointSet sets[] = {PointSet::full(box), PointSet::full(box),
                           PointSet::full(box)};
  const ProductBoundReport rep = verify_product_bound(sets);
  CHECK(rep.lhs == 0);
  CHECK(rep.rhs == 0);
  CHECK(rep.verdict == Verdict::holds);
}

TEST_CASE("product bound: three random sets on box (3,3)") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Box box({3, 3});
    const PointSet sets[] = {
        random_pointset(box, Rational(1, 2), derive_seed(50, seed * 3), true),
        random_pointset(box, Rational(1, 3), derive_seed(50, seed * 3 + 1), false),
        random_pointset(box, Rational(2, 3), derive_seed(50, seed * 3 + 2), true)};
    CHECK(verify_product_bound(sets).verdict == Verdict::holds);
  }
  const PointSet one[] = {PointSet::full(Box({2, 2}))};
  CHECK_THROWS_AS(verify_product_bound(one), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// basis

TEST_CASE("basis: odds have order two") {
  const Box box = Box::line(32);
  const BasisReport rep = basis_order(named("odds", box), 16);
  CHECK(rep.outcome == BasisReport::Outcome::found);
  CHECK(rep.order == 2);
  CHECK(rep.verdict == Verdict::holds);
  CHECK(rep.bound_ok);
}

TEST_CASE("basis: evens are not a basis") {
  const Box box = Box::line(32);
  const BasisReport rep = basis_order(named("evens", box), 16);
  CHECK(rep.outcome == BasisReport::Outcome::not_a_basis);
  CHECK(rep.alpha == 0);
  CHECK(rep.verdict == Verdict::holds);
}

TEST_CASE("basis: the full cone has order one") {
  const Box box({2, 2});
  const BasisReport rep = basis_order(PointSet::full(box), 4);
  CHECK(rep.outcome == BasisReport::Outcome::found);
  CHECK(rep.order == 1);
}

TEST_CASE("basis: random sets with atoms satisfy the 2*h0 bound") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const bool one_d = seed % 2 == 0;
    const Box box = one_d ? Box::line(24) : Box({3, 3});
    const PointSet a =
        random_pointset(box, Rational(2, 5), derive_seed(60, seed), true);
    const BasisReport rep = basis_order(a, 16);
    CHECK(rep.alpha > 0);
    REQUIRE(rep.outcome == BasisReport::Outcome::found);
    CHECK(rep.order <= 2 * rep.h0);
    CHECK(rep.verdict == Verdict::holds);
  }
  CHECK_THROWS_AS(basis_order(PointSet(Box::line(4)), 0), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// mann

TEST_CASE("mann 1D: odds/odds reach the bound") {
  const Box box = Box::line(16);
  const PointSet odds = named("odds", box);
  const MannReport rep = mann_check(odds, odds);
  CHECK(rep.asserted);
  CHECK(rep.bound == 1);
  CHECK(rep.sigma_c == 1);
  CHECK(rep.verdict == Verdict::holds);
}

TEST_CASE("mann 1D: beta = 0 makes the bound trivial") {
  const Box box = Box::line(16);
  const MannReport rep = mann_check(named("odds", box), named("evens", box));
  CHECK(rep.beta == 0);
  CHECK(rep.bound == rep.alpha);
  CHECK(rep.verdict == Verdict::holds);
}

TEST_CASE("mann in 2D reports and never asserts") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Box box({3, 3});
    const PointSet a =
        random_pointset(box, Rational(1, 2), derive_seed(70, seed * 2), false);
    const PointSet b =
        random_pointset(box, Rational(1, 2), derive_seed(70, seed * 2 + 1), false);
    const MannReport rep = mann_check(a, b);
    CHECK_FALSE(rep.asserted);
    const bool sane = rep.verdict == Verdict::holds ||
                      rep.verdict == Verdict::candidate_observation;
    CHECK(sane);
    if (rep.verdict == Verdict::candidate_observation) {
      CHECK(rep.set_a == a.points());  // reproduction data
      CHECK(rep.set_b == b.points());
    }
  }
}
