#include "acceptance/acceptance.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "conedens/density.hpp"
#include "conedens/ideals.hpp"
#include "conedens/json_io.hpp"
#include "conedens/order.hpp"
#include "conedens/pointset.hpp"
#include "conedens/setgen.hpp"
#include "conedens/theorems.hpp"
#include "reference/reference.hpp"

namespace conedens::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

Rational random_probability(std::mt19937_64& rng, int lo_twentieths,
                            int hi_twentieths) {
  return Rational(static_cast<std::int64_t>(
                      uniform(rng, static_cast<std::uint64_t>(lo_twentieths),
                              static_cast<std::uint64_t>(hi_twentieths))),
                  20);
}

struct Tally {
  int failures = 0;
  std::string first_failure;
  void fail(const std::string& msg) {
    #pragma omp critical
    {
      ++failures;
      if (first_failure.empty()) first_failure = msg;
    }
  }
};

// --------------------------------------------------------------------------

CriterionResult classical_densities(std::uint64_t seed) {
  Tally t;
  const Box box = Box::line(100);

  const PointSet odds = parse_and_build("odds", box, 0);
  if (sigma_1d(odds).value != Rational(1, 2)) t.fail("sigma(odds, 100) != 1/2");

  for (int n : {1, 2, 3, 10, 37, 100}) {
    const Box bn = Box::line(n);
    if (sigma_1d(parse_and_build("evens", bn, 0)).value != 0)
      t.fail("sigma(evens, " + std::to_string(n) + ") != 0");
  }

  if (sigma_1d(PointSet::full(box)).value != 1) t.fail("sigma(full) != 1");

  const int kSets = 500;
  #pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < kSets; ++i) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const Box b = Box::line(static_cast<int>(uniform(rng, 4, 60)));
    const PointSet a =
        random_pointset(b, random_probability(rng, 0, 20), rng(), false);
    const DensityReport rep = sigma_1d(a);
    if (rep.value > 0 && !a.contains({1}))
      t.fail("positive density without 1 in A (set " + std::to_string(i) + ")");
  }

  std::ostringstream d;
  d << "odds=1/2, evens=0, full=1; " << kSets << " random sets: sigma>0 => 1 in A";
  return {1, "classical-densities", t.failures == 0,
          t.failures ? t.first_failure : d.str(), 0, 1.0};
}

// --------------------------------------------------------------------------

CriterionResult order_machinery(std::uint64_t seed) {
  Tally t;

  // interval cardinality, exhaustive up to m = (4,4,4)
  std::uint64_t intervals = 0;
  for (const Box& box : {Box({4}), Box({4, 4}), Box({4, 4, 4})}) {
    for (std::uint64_t idx = 1; idx < box.volume(); ++idx) {
      const Point x = box.point_at(idx);
      std::uint64_t expect = 1;
      for (int v : x) expect *= static_cast<std::uint64_t>(v) + 1;
      expect -= 2;
      if (open_interval_below(x).size() != expect)
        t.fail("interval size mismatch at " + point_str(x));
      ++intervals;
    }
  }

  // enumeration vs brute-force subset filter on every box with <= 20 cone points
  std::vector<std::vector<int>> shapes;
  for (int m1 = 1; m1 <= 20; ++m1) shapes.push_back({m1});
  for (int m1 = 1; m1 <= 9; ++m1)
    for (int m2 = 1; m2 <= 9; ++m2)
      if ((m1 + 1) * (m2 + 1) - 1 <= 20) shapes.push_back({m1, m2});
  for (int m1 = 1; m1 <= 4; ++m1)
    for (int m2 = 1; m2 <= 4; ++m2)
      for (int m3 = 1; m3 <= 4; ++m3)
        if ((m1 + 1) * (m2 + 1) * (m3 + 1) - 1 <= 20) shapes.push_back({m1, m2, m3});

  #pragma omp parallel for schedule(dynamic)
  for (std::size_t si = 0; si < shapes.size(); ++si) {
    const Box box(shapes[si]);
    std::vector<OrderIdeal> fast = enumerate_ideals(box);
    std::vector<OrderIdeal> slow = reference::ideals_brute_force(box);
    auto key = [](const OrderIdeal& j) { return j.points(); };
    std::vector<std::vector<Point>> fk, sk;
    for (const auto& j : fast) {
      if (!is_downward_closed(j.points()))
        t.fail("yielded ideal not downward closed");
      fk.push_back(key(j));
    }
    for (const auto& j : slow) sk.push_back(key(j));
    std::sort(fk.begin(), fk.end());
    std::sort(sk.begin(), sk.end());
    if (fk != sk) t.fail("ideal family mismatch on box " + point_str(shapes[si]));
    const auto counted = ideal_count(box);
    if (!counted || *counted != BigInt(fast.size()))
      t.fail("closed-form ideal count mismatch on box " + point_str(shapes[si]));
  }

  // lex extends rect on 10^4 random pairs, plus the e1/e2 pair
  const Point e1 = unit_vector(2, 0), e2 = unit_vector(2, 1);
  if (!leq_lex(e2, e1) || leq_rect(e2, e1)) t.fail("e2/e1 example broken");
  const int kPairs = 10000;
  #pragma omp parallel for schedule(static)
  for (int i = 0; i < kPairs; ++i) {
    std::mt19937_64 rng(derive_seed(seed ^ 0xabcd, static_cast<std::uint64_t>(i)));
    const int n = static_cast<int>(uniform(rng, 1, 4));
    Point x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      x[static_cast<std::size_t>(j)] = static_cast<int>(uniform(rng, 0, 6));
      y[static_cast<std::size_t>(j)] = static_cast<int>(uniform(rng, 0, 6));
    }
    if (leq_rect(x, y) && !leq_lex(x, y)) t.fail("lex does not extend rect");
    if (!leq_lex(x, y) && !leq_lex(y, x)) t.fail("lex not total");
  }

  std::ostringstream d;
  d << intervals << " interval cardinalities, " << shapes.size()
    << " boxes vs subset filter, " << kPairs << " extension pairs";
  return {2, "order-machinery", t.failures == 0,
          t.failures ? t.first_failure : d.str(), 0, 30.0};
}

// --------------------------------------------------------------------------

CriterionResult shnirelman_inequality(std::uint64_t seed) {
  Tally t;
  const int kInstances = 500;
  #pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < kInstances; ++i) {
    std::mt19937_64 rng(derive_seed(seed ^ 0x5103, static_cast<std::uint64_t>(i)));
    const bool one_d = i % 2 == 0;
    const Box box = one_d ? Box::line(static_cast<int>(uniform(rng, 8, 64)))
                          : Box({static_cast<int>(uniform(rng, 2, 5)),
                                 static_cast<int>(uniform(rng, 2, 5))});
    const PointSet a = random_pointset(box, random_probability(rng, 1, 19), rng(),
                                       rng() % 2 == 0);
    const PointSet b = random_pointset(box, random_probability(rng, 1, 19), rng(),
                                       rng() % 2 == 0);
    const InequalityReport rep = verify_shnirelman(a, b);
    if (rep.verdict != Verdict::holds)
      t.fail("instance " + std::to_string(i) + ": sigma(A+B) = " +
             fraction_string(rep.sigma_c) + " < bound " + fraction_string(rep.bound));
  }
  return {3, "shnirelman-inequality", t.failures == 0,
          t.failures ? t.first_failure
                     : std::to_string(kInstances) +
                           " randomized instances, global and per-ideal bounds exact",
          0, 300.0};
}

// --------------------------------------------------------------------------

CriterionResult partition_certificates(std::uint64_t seed) {
  Tally t;

  // the worked 1D example: J = {1..5}, B = {1,3}
  {
    const Box box = Box::line(8);
    const OrderIdeal j = downward_closure(std::vector<Point>{{5}});
    const PointSet b = PointSet::of(box, {{1}, {3}});
    const PartitionCertificate cert =
        partition_j_star(j, b, ConeContext{1, ExtensionRule::lexicographic});
    if (!cert.check().empty()) t.fail("worked example: certificate invalid");
    if (cert.parts.size() != 2 || cert.parts[0].anchor != Point{1} ||
        cert.parts[0].members != std::vector<Point>{{2}} ||
        cert.parts[1].anchor != Point{3} ||
        cert.parts[1].members != std::vector<Point>{{4}, {5}})
      t.fail("worked example: parts differ from ((1,{2}),(3,{4,5}))");
  }

  const int kInstances = 200;
  #pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < kInstances; ++i) {
    std::mt19937_64 rng(derive_seed(seed ^ 0x9a27, static_cast<std::uint64_t>(i)));
    const int n = 1 + i % 3;
    Box box = n == 1   ? Box::line(static_cast<int>(uniform(rng, 4, 24)))
              : n == 2 ? Box({static_cast<int>(uniform(rng, 2, 4)),
                              static_cast<int>(uniform(rng, 2, 4))})
                       : Box({static_cast<int>(uniform(rng, 1, 3)),
                              static_cast<int>(uniform(rng, 1, 3)),
                              static_cast<int>(uniform(rng, 1, 3))});
    bool done = false;
    for (int attempt = 0; attempt < 64 && !done; ++attempt) {
      PointSet seed_set =
          random_pointset(box, random_probability(rng, 4, 16), rng(), false);
      if (seed_set.empty())
        seed_set.insert_index(1 + rng() % box.cone_size());
      const OrderIdeal j = downward_closure(seed_set.points());
      const PointSet b =
          random_pointset(box, random_probability(rng, 6, 14), rng(), true);
      bool j_star_nonempty = false;
      for (const Point& x : j.points())
        if (!b.contains(x)) j_star_nonempty = true;
      if (!j_star_nonempty) continue;
      const PartitionCertificate cert =
          partition_j_star(j, b, ConeContext{n, ExtensionRule::lexicographic});
      const auto bad = cert.check();
      if (!bad.empty())
        t.fail("instance " + std::to_string(i) + ": " + bad.front());
      done = true;
    }
    if (!done) t.fail("instance " + std::to_string(i) + ": could not sample J, B");
  }
  return {4, "partition-certificates", t.failures == 0,
          t.failures ? t.first_failure
                     : "worked example exact; " + std::to_string(kInstances) +
                           " randomized certificates, all invariants hold",
          0, 60.0};
}

// --------------------------------------------------------------------------

// Carve random holes into B = full cone while keeping the density sum above
// the target; every removal is re-validated exactly.
PointSet carve_b(const Box& box, const Rational& alpha, bool strict,
                 std::mt19937_64& rng, std::uint64_t cap) {
  PointSet b = PointSet::full(box);
  std::vector<std::uint64_t> order;
  for (std::uint64_t idx = 1; idx < box.volume(); ++idx) order.push_back(idx);
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[rng() % i]);
  for (std::uint64_t idx : order) {
    PointSet candidate = b;
    candidate.erase(box.point_at(idx));
    const Rational beta = box.dim() == 1 ? sigma_1d(candidate).value
                                         : sigma_ideal_family(candidate, cap).value;
    const Rational sum = alpha + beta;
    if (strict ? sum > 1 : sum >= 1) b = std::move(candidate);
  }
  return b;
}

CriterionResult pigeonhole_theorems(std::uint64_t seed) {
  Tally t;
  const int kInstances = 200;

  // 1D, density sum >= 1
  #pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < kInstances; ++i) {
    std::mt19937_64 rng(derive_seed(seed ^ 0x71d1, static_cast<std::uint64_t>(i)));
    const int n_max = static_cast<int>(uniform(rng, 6, 48));
    const Box box = Box::line(n_max);
    const PointSet a =
        random_pointset(box, random_probability(rng, 4, 18), rng(), true);
    const PointSet b = carve_b(box, sigma_1d(a).value, false, rng, kDefaultIdealCap);

    const PointSet c = sumset(a, b);
    if (!(c == PointSet::full(box))) {
      t.fail("1D instance " + std::to_string(i) + ": sumset does not cover");
      continue;
    }
    for (int x = 1; x <= n_max; ++x) {
      const Decomposition d = pigeonhole_decompose_1d(a, b, x);
      const int da = d.a[0], db = d.b[0];
      const bool a_ok = da == 0 || a.contains({da});
      const bool b_ok = db == 0 || b.contains({db});
      if (da + db != x || !a_ok || !b_ok)
        t.fail("1D instance " + std::to_string(i) + ": bad pair for x = " +
               std::to_string(x));
    }
  }

  // 2D, density sum > 1, atoms present
  #pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < kInstances; ++i) {
    std::mt19937_64 rng(derive_seed(seed ^ 0x71d2, static_cast<std::uint64_t>(i)));
    const Box box({static_cast<int>(uniform(rng, 2, 4)),
                   static_cast<int>(uniform(rng, 2, 4))});
    const PointSet a =
        random_pointset(box, random_probability(rng, 8, 18), rng(), true);
    const PointSet b = carve_b(box, sigma_ideal_family(a).value, true, rng,
                               kDefaultIdealCap);

    const CoverReport cover = cover_check(a, b);
    if (cover.verdict != Verdict::holds) {
      t.fail("2D instance " + std::to_string(i) + ": cover verdict " +
             std::string(verdict_str(cover.verdict)));
      continue;
    }
    for (std::uint64_t idx = 1; idx < box.volume(); ++idx) {
      const Point x = box.point_at(idx);
      if (open_interval_below(x).empty()) continue;  // atoms: covered directly
      const Decomposition d = pigeonhole_decompose(a, b, x);
      if (point_add(d.a, d.b) != x || !a.contains(d.a) || !b.contains(d.b))
        t.fail("2D instance " + std::to_string(i) + ": bad pair for x = " +
               point_str(x));
    }
  }

  return {5, "pigeonhole-theorems", t.failures == 0,
          t.failures ? t.first_failure
                     : "200 1D (sum >= 1) + 200 2D (sum > 1) instances: full "
                       "cover, valid decompositions",
          0, 120.0};
}

// --------------------------------------------------------------------------

CriterionResult basis_theorems(std::uint64_t seed) {
  Tally t;

  {
    const Box box = Box::line(32);
    const BasisReport odds = basis_order(parse_and_build("odds", box, 0), 16);
    if (odds.outcome != BasisReport::Outcome::found || odds.order != 2)
      t.fail("basis_order(odds, 32) != 2");
    const BasisReport evens = basis_order(parse_and_build("evens", box, 0), 16);
    if (evens.outcome != BasisReport::Outcome::not_a_basis)
      t.fail("basis_order(evens) is not 'not-a-basis'");
    if (evens.verdict != Verdict::holds) t.fail("evens verdict not holds");
  }

  const int kInstances = 100;
  #pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < kInstances; ++i) {
    std::mt19937_64 rng(derive_seed(seed ^ 0xba51, static_cast<std::uint64_t>(i)));
    const bool one_d = i % 2 == 0;
    const Box box = one_d ? Box::line(static_cast<int>(uniform(rng, 8, 32)))
                          : Box({static_cast<int>(uniform(rng, 2, 4)),
                                 static_cast<int>(uniform(rng, 2, 4))});
    const PointSet a =
        random_pointset(box, random_probability(rng, 7, 18), rng(), true);
    const BasisReport rep = basis_order(a, 16);
    if (rep.alpha <= 0) {
      t.fail("instance " + std::to_string(i) + ": atoms forced but alpha = 0");
    } else if (rep.outcome != BasisReport::Outcome::found) {
      t.fail("instance " + std::to_string(i) + ": no basis order within 16");
    } else if (!rep.bound_ok) {
      t.fail("instance " + std::to_string(i) + ": order " +
             std::to_string(rep.order) + " exceeds 2*h0 = " +
             std::to_string(2 * rep.h0));
    }
  }
  return {6, "basis-theorems", t.failures == 0,
          t.failures ? t.first_failure
                     : "odds->2, evens->not-a-basis; " + std::to_string(kInstances) +
                           " random sets within h_max=16 and h <= 2*h0",
          0, 120.0};
}

// --------------------------------------------------------------------------

CriterionResult kernel_correctness(std::uint64_t seed) {
  Tally t;
  const int k1 = 1000, k2 = 300;

  #pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < k1; ++i) {
    std::mt19937_64 rng(derive_seed(seed ^ 0x4e01, static_cast<std::uint64_t>(i)));
    const Box box = Box::line(256);
    const PointSet a =
        random_pointset(box, random_probability(rng, 0, 20), rng(), false);
    const PointSet b =
        random_pointset(box, random_probability(rng, 0, 20), rng(), false);
    if (!(sumset(a, b) == reference::sumset_naive(a, b)))
      t.fail("1D kernel mismatch at instance " + std::to_string(i));
  }

  #pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < k2; ++i) {
    std::mt19937_64 rng(derive_seed(seed ^ 0x4e02, static_cast<std::uint64_t>(i)));
    const Box box({8, 8});
    const PointSet a =
        random_pointset(box, random_probability(rng, 0, 20), rng(), false);
    const PointSet b =
        random_pointset(box, random_probability(rng, 0, 20), rng(), false);
    if (!(sumset(a, b) == reference::sumset_naive(a, b)))
      t.fail("2D kernel mismatch at instance " + std::to_string(i));
  }

  return {7, "kernel-correctness", t.failures == 0,
          t.failures ? t.first_failure
                     : std::to_string(k1) + " 1D (N=256) + " + std::to_string(k2) +
                           " 2D (m=(8,8)) pairs vs naive oracle, zero mismatches",
          0, 60.0};
}

// --------------------------------------------------------------------------

CriterionResult mann_explorer(std::uint64_t seed) {
  Tally t;
  int observations = 0;

  const int k1 = 500;
  #pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < k1; ++i) {
    std::mt19937_64 rng(derive_seed(seed ^ 0x3a21, static_cast<std::uint64_t>(i)));
    const Box box = Box::line(static_cast<int>(uniform(rng, 6, 64)));
    const PointSet a = random_pointset(box, random_probability(rng, 1, 19), rng(),
                                       rng() % 2 == 0);
    const PointSet b = random_pointset(box, random_probability(rng, 1, 19), rng(),
                                       rng() % 2 == 0);
    const MannReport rep = mann_check(a, b);
    if (!rep.asserted) t.fail("1D mann not asserted");
    if (rep.verdict != Verdict::holds)
      t.fail("1D Mann bound violated at instance " + std::to_string(i));
  }

  const int k2 = 100;
  #pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < k2; ++i) {
    std::mt19937_64 rng(derive_seed(seed ^ 0x3a22, static_cast<std::uint64_t>(i)));
    const Box box({static_cast<int>(uniform(rng, 2, 4)),
                   static_cast<int>(uniform(rng, 2, 4))});
    const PointSet a = random_pointset(box, random_probability(rng, 2, 18), rng(),
                                       rng() % 2 == 0);
    const PointSet b = random_pointset(box, random_probability(rng, 2, 18), rng(),
                                       rng() % 2 == 0);
    const MannReport rep = mann_check(a, b);
    if (rep.asserted) t.fail("2D mann must not assert");
    if (rep.verdict != Verdict::holds &&
        rep.verdict != Verdict::candidate_observation)
      t.fail("2D mann verdict out of range");
    const Json j = json_mann(rep);
    for (const char* key : {"theorem", "verdict", "alpha", "beta", "bound",
                            "sigma_sum", "asserted"})
      if (!j.contains(key)) t.fail(std::string("2D mann report missing ") + key);
    if (rep.verdict == Verdict::candidate_observation) {
      #pragma omp atomic
      ++observations;
    }
  }

  std::ostringstream d;
  d << k1 << " 1D instances asserted; " << k2 << " 2D reports well-formed, "
    << observations << " candidate observation(s)";
  return {8, "mann-explorer", t.failures == 0,
          t.failures ? t.first_failure : d.str(), 0, 180.0};
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t base_seed) {
  const auto start = Clock::now();
  CriterionResult r;
  switch (id) {
    case 1: r = classical_densities(base_seed); break;
    case 2: r = order_machinery(base_seed); break;
    case 3: r = shnirelman_inequality(base_seed); break;
    case 4: r = partition_certificates(base_seed); break;
    case 5: r = pigeonhole_theorems(base_seed); break;
    case 6: r = basis_theorems(base_seed); break;
    case 7: r = kernel_correctness(base_seed); break;
    case 8: r = mann_explorer(base_seed); break;
    default: throw std::invalid_argument("criterion id must be 1..8");
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (r.seconds >= r.budget_seconds) {
    r.passed = false;
    r.detail += " [exceeded runtime budget]";
  }
  return r;
}

std::vector<CriterionResult> run_all(std::uint64_t base_seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 8; ++id) out.push_back(run_criterion(id, base_seed));
  return out;
}

int print_results(const std::vector<CriterionResult>& results) {
  bool all = true;
  for (const auto& r : results) {
    std::printf("[%s] %d. %-24s (%.2fs / %.0fs) %s\n", r.passed ? "PASS" : "FAIL",
                r.id, r.name.c_str(), r.seconds, r.budget_seconds,
                r.detail.c_str());
    all = all && r.passed;
  }
  std::printf("%s: %zu/%zu criteria passed\n", all ? "OK" : "FAILED",
              static_cast<std::size_t>(
                  std::count_if(results.begin(), results.end(),
                                [](const CriterionResult& r) { return r.passed; })),
              results.size());
  return all ? 0 : 1;
}

}  // namespace conedens::acceptance
