#include "conedens/theorems.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "conedens/errors.hpp"
#include "conedens/ordered_group.hpp"

namespace conedens {

std::string_view verdict_str(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::hypothesis_not_met: return "hypothesis-not-met";
    case Verdict::violated: return "violated";
    case Verdict::candidate_observation: return "candidate-observation";
  }
  return "unknown";
}

namespace {

void require_same_box(const PointSet& a, const PointSet& b) {
  if (!(a.box() == b.box())) throw std::invalid_argument("box mismatch");
}

struct FamilyMins {
  std::vector<std::int64_t> num, den;       // per-tracked minimum ratios
  std::vector<std::vector<std::uint64_t>> witness;
  std::uint64_t family = 0;
};

// One family traversal computing min |T_k ∩ J| / |J| for each tracked grid,
// with the first minimizing ideal of each as witness.
FamilyMins density_mins(const Box& box, std::span<const BitGrid* const> tracked,
                        std::uint64_t cap) {
  FamilyMins r;
  const std::size_t k = tracked.size();
  r.num.assign(k, 1);
  r.den.assign(k, 1);
  r.witness.resize(k);
  bool have = false;
  for_each_ideal(box, cap, tracked, [&](const IdealCursor& cur) {
    ++r.family;
    const std::int64_t size = static_cast<std::int64_t>(cur.size);
    for (std::size_t t = 0; t < k; ++t) {
      const std::int64_t cnt = cur.tracked_counts[t];
      if (!have || cnt * r.den[t] < r.num[t] * size) {
        r.num[t] = cnt;
        r.den[t] = size;
        r.witness[t].assign(cur.members.begin(), cur.members.end());
      }
    }
    have = true;
    return true;
  });
  if (!have) throw std::logic_error("empty ideal family");
  return r;
}

std::vector<Point> to_points(const Box& box, const std::vector<std::uint64_t>& idx) {
  std::vector<Point> pts;
  pts.reserve(idx.size());
  for (std::uint64_t i : idx) pts.push_back(box.point_at(i));
  return pts;
}

}  // namespace

// ---------------------------------------------------------------------------
// Pigeonhole decompositions

Decomposition pigeonhole_decompose_1d(const PointSet& a, const PointSet& b,
                                      int x, int n_max) {
  require_same_box(a, b);
  if (a.box().dim() != 1)
    throw std::invalid_argument("pigeonhole_decompose_1d: sets are not 1-dimensional");
  if (n_max == 0) n_max = a.box().bounds()[0];
  if (x < 1 || x > n_max)
    throw std::invalid_argument("target x out of range [1, n_max]");

  const Rational alpha = sigma_1d(a, n_max).value;
  const Rational beta = sigma_1d(b, n_max).value;
  if (alpha + beta < 1)
    throw HypothesisError("sigma(A) + sigma(B) = " + fraction_string(alpha + beta) +
                          " < 1");

  const std::uint64_t ux = static_cast<std::uint64_t>(x);
  if (a.contains_index(ux)) return Decomposition{{x}, {0}, true};
  if (b.contains_index(ux)) return Decomposition{{0}, {x}, true};
  for (int aa = 1; aa < x; ++aa)
    if (a.contains_index(static_cast<std::uint64_t>(aa)) &&
        b.contains_index(static_cast<std::uint64_t>(x - aa)))
      return Decomposition{{aa}, {x - aa}, false};
  throw std::logic_error("pigeonhole guarantees a decomposition; none found for x = " +
                         std::to_string(x));
}

Decomposition pigeonhole_decompose(const PointSet& a, const PointSet& b,
                                   const Point& x, std::uint64_t cap) {
  require_same_box(a, b);
  const Box& box = a.box();
  if (!box.cone_contains(x))
    throw std::invalid_argument("target outside boxed cone: " + point_str(x));

  const std::vector<Point> interval = open_interval_below(x);
  if (interval.empty())
    throw HypothesisError("target " + point_str(x) +
                          " is an atom (empty open interval); use cover_check");

  const BitGrid* tracked[] = {&a.bits(), &b.bits()};
  const FamilyMins mins = density_mins(box, tracked, cap);
  const Rational alpha(mins.num[0], mins.den[0]);
  const Rational beta(mins.num[1], mins.den[1]);
  if (alpha + beta <= 1)
    throw HypothesisError("sigma(A) + sigma(B) = " + fraction_string(alpha + beta) +
                          " is not > 1");

  const LatticeCone group(box.dim());
  const auto pair = pigeonhole_pair(
      group, x, [&](const Point& z) { return a.contains(z); },
      [&](const Point& z) { return b.contains(z); });
  if (pair) return Decomposition{pair->first, pair->second, false};
  throw std::logic_error("pigeonhole guarantees a decomposition; none found for x = " +
                         point_str(x));
}

// ---------------------------------------------------------------------------
// Covering

CoverReport cover_check(const PointSet& a, const PointSet& b, std::uint64_t cap) {
  require_same_box(a, b);
  const Box& box = a.box();

  CoverReport rep;
  rep.atoms_present = true;
  for (const Point& e : atoms(box.dim()))
    if (!a.contains(e) && !b.contains(e)) rep.atoms_present = false;

  const BitGrid* tracked[] = {&a.bits(), &b.bits()};
  const FamilyMins mins = density_mins(box, tracked, cap);
  rep.family_size = mins.family;
  rep.alpha = Rational(mins.num[0], mins.den[0]);
  rep.beta = Rational(mins.num[1], mins.den[1]);
  rep.density_sum_exceeds = rep.alpha + rep.beta > 1;

  if (!rep.atoms_present || !rep.density_sum_exceeds) {
    rep.verdict = Verdict::hypothesis_not_met;
    rep.note = !rep.atoms_present ? "some atom is missing from A ∪ B"
                                  : "sigma(A) + sigma(B) is not > 1";
    return rep;
  }

  const PointSet c = sumset(a, b);
  for (std::uint64_t idx = 1; idx < box.volume(); ++idx)
    if (!c.contains_index(idx)) rep.missing.push_back(box.point_at(idx));
  rep.verdict = rep.missing.empty() ? Verdict::holds : Verdict::violated;
  return rep;
}

// ---------------------------------------------------------------------------
// Partition of J \ B

PartitionCertificate partition_j_star(const OrderIdeal& j, const PointSet& b,
                                      const ConeContext& ctx) {
  const int n = ctx.n;
  if (b.box().dim() != n || (j.size() && static_cast<int>(j.points()[0].size()) != n))
    throw std::invalid_argument("dimension mismatch between J, B and context");

  std::vector<Point> j_star;
  for (const Point& x : j.points())
    if (!b.contains(x)) j_star.push_back(x);
  if (j_star.empty()) throw HypothesisError("J \\ B is empty: J is contained in B");

  // total order used to select b*(x); covers J ∪ B
  std::vector<Point> domain = j.points();
  for (Point& p : b.points()) domain.push_back(std::move(p));
  LinearExtension ext = szpilrajn_extension(std::move(domain), ctx);

  const LatticeCone group(n);
  Point failed_at;
  auto parts = partition_by_max_anchor(
      group, j_star, [&](const Point& z) { return b.contains(z); },
      [&](const Point& u, const Point& v) { return ext.rank_of(u) < ext.rank_of(v); },
      &failed_at);
  if (!parts)
    throw HypothesisError("B ∩ (0, x) is empty for x = " + point_str(failed_at));

  PartitionCertificate cert{j, b, {}, std::move(ext), ctx.extension};
  for (auto& part : *parts) {
    std::sort(part.members.begin(), part.members.end());
    cert.parts.push_back(PartitionPart{std::move(part.anchor), std::move(part.members)});
  }
  return cert;
}

std::vector<std::string> PartitionCertificate::check() const {
  std::vector<std::string> bad;

  std::vector<Point> expected;  // J \ B
  for (const Point& x : j.points())
    if (!b_used.contains(x)) expected.push_back(x);

  std::vector<Point> covered;
  std::vector<Point> anchors;
  const LatticeCone group(b_used.box().dim());
  for (const auto& part : parts) {
    if (part.members.empty()) bad.push_back("empty part at anchor " + point_str(part.anchor));
    if (!b_used.contains(part.anchor))
      bad.push_back("anchor " + point_str(part.anchor) + " is not in B");
    anchors.push_back(part.anchor);
    for (const Point& x : part.members) covered.push_back(x);

    // the translate J_l * b_l^{-1} must be a downward-closed subset of the cone
    const std::vector<Point> translate = part_translate(
        group, GroupPart<Point>{part.anchor, part.members}, GroupSide::right);
    bool in_cone_ok = true;
    for (const Point& t : translate)
      if (!in_cone(t)) in_cone_ok = false;
    if (!in_cone_ok)
      bad.push_back("translate of part " + point_str(part.anchor) +
                    " leaves the cone");
    else if (!is_downward_closed(translate))
      bad.push_back("translate of part " + point_str(part.anchor) +
                    " is not downward closed");
  }

  std::sort(anchors.begin(), anchors.end());
  if (std::adjacent_find(anchors.begin(), anchors.end()) != anchors.end())
    bad.push_back("anchors are not distinct");

  const std::size_t covered_total = covered.size();
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  if (covered.size() != covered_total) bad.push_back("parts are not pairwise disjoint");
  if (covered != expected) bad.push_back("union of parts differs from J \\ B");

  return bad;
}

// ---------------------------------------------------------------------------
// Density inequalities

InequalityReport verify_shnirelman(const PointSet& a, const PointSet& b,
                                   std::uint64_t cap, std::uint64_t margin_capture) {
  require_same_box(a, b);
  const Box& box = a.box();
  const PointSet c = sumset(a, b);

  const BitGrid* tracked[] = {&a.bits(), &b.bits(), &c.bits()};
  const FamilyMins mins = density_mins(box, tracked, cap);

  InequalityReport rep;
  rep.alpha = Rational(mins.num[0], mins.den[0]);
  rep.beta = Rational(mins.num[1], mins.den[1]);
  rep.sigma_c = Rational(mins.num[2], mins.den[2]);
  rep.bound = rep.alpha + rep.beta - rep.alpha * rep.beta;
  rep.family_size = mins.family;
  // the bound is constant over the family, so the smallest per-ideal margin
  // is attained exactly at the sigma witness
  rep.min_margin = rep.sigma_c - rep.bound;
  rep.min_margin_ideal = to_points(box, mins.witness[2]);
  rep.verdict = rep.min_margin >= 0 ? Verdict::holds : Verdict::violated;
  rep.margins_complete = margin_capture >= mins.family;

  if (margin_capture > 0) {
    const BitGrid* ctr[] = {&c.bits()};
    for_each_ideal(box, cap, ctr, [&](const IdealCursor& cur) {
      rep.margins.push_back(IdealMargin{
          to_points(box, {cur.members.begin(), cur.members.end()}),
          Rational(cur.tracked_counts[0], static_cast<std::int64_t>(cur.size)) -
              rep.bound});
      return cur.ordinal + 1 < margin_capture;
    });
  }
  return rep;
}

ProductBoundReport verify_product_bound(std::span<const PointSet> sets,
                                        std::uint64_t cap) {
  if (sets.size() < 2)
    throw std::invalid_argument("product bound needs at least two sets");
  for (const PointSet& s : sets) require_same_box(sets[0], s);
  const Box& box = sets[0].box();

  PointSet product = sets[0];
  for (std::size_t i = 1; i < sets.size(); ++i) product = sumset(product, sets[i]);

  std::vector<const BitGrid*> tracked;
  tracked.reserve(sets.size() + 1);
  for (const PointSet& s : sets) tracked.push_back(&s.bits());
  tracked.push_back(&product.bits());
  const FamilyMins mins = density_mins(box, tracked, cap);

  ProductBoundReport rep;
  rep.family_size = mins.family;
  rep.rhs = 1;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    rep.alphas.emplace_back(mins.num[i], mins.den[i]);
    rep.rhs *= 1 - rep.alphas.back();
  }
  rep.sigma_product = Rational(mins.num[sets.size()], mins.den[sets.size()]);
  rep.lhs = 1 - rep.sigma_product;
  rep.verdict = rep.lhs <= rep.rhs ? Verdict::holds : Verdict::violated;
  return rep;
}

// ---------------------------------------------------------------------------
// Basis order

BasisReport basis_order(const PointSet& a, int h_max, std::uint64_t cap) {
  if (h_max < 1) throw std::invalid_argument("h_max must be >= 1");
  const Box& box = a.box();
  const PointSet cone = PointSet::full(box);

  BasisReport rep;
  rep.h_max = h_max;
  rep.alpha = sigma_ideal_family(a, cap).value;
  if (rep.alpha > 0) {
    rep.h0_known = true;
    rep.h0 = h0_for_half(rep.alpha);
  }

  rep.outcome = BasisReport::Outcome::not_within_h_max;
  PointSet fold = a;
  for (int h = 1; h <= h_max; ++h) {
    if (h > 1) {
      PointSet next = sumset(fold, a);
      if (next == fold) {
        rep.outcome = BasisReport::Outcome::not_a_basis;
        rep.fixpoint_h = h;
        break;
      }
      fold = std::move(next);
    }
    if (fold == cone) {
      rep.outcome = BasisReport::Outcome::found;
      rep.order = h;
      break;
    }
  }

  switch (rep.outcome) {
    case BasisReport::Outcome::found:
      rep.bound_ok = !rep.h0_known || rep.order <= 2 * rep.h0;
      rep.verdict = rep.bound_ok ? Verdict::holds : Verdict::violated;
      break;
    case BasisReport::Outcome::not_a_basis:
      // with positive box density a basis of order 2*h0 is guaranteed
      rep.verdict = rep.h0_known ? Verdict::violated : Verdict::holds;
      break;
    case BasisReport::Outcome::not_within_h_max:
      rep.verdict = (rep.h0_known && 2 * rep.h0 <= h_max) ? Verdict::violated
                                                          : Verdict::holds;
      break;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Mann explorer

MannReport mann_check(const PointSet& a, const PointSet& b, std::uint64_t cap) {
  require_same_box(a, b);
  const Box& box = a.box();
  const PointSet c = sumset(a, b);

  const BitGrid* tracked[] = {&a.bits(), &b.bits(), &c.bits()};
  const FamilyMins mins = density_mins(box, tracked, cap);

  MannReport rep;
  rep.dim = box.dim();
  rep.asserted = rep.dim == 1;
  rep.alpha = Rational(mins.num[0], mins.den[0]);
  rep.beta = Rational(mins.num[1], mins.den[1]);
  rep.sigma_c = Rational(mins.num[2], mins.den[2]);
  const Rational density_sum = rep.alpha + rep.beta;
  rep.bound = density_sum > 1 ? Rational(1) : density_sum;
  rep.family_size = mins.family;

  if (rep.sigma_c >= rep.bound) {
    rep.verdict = Verdict::holds;
  } else if (rep.asserted) {
    rep.verdict = Verdict::violated;  // Mann's theorem: this is an implementation bug
  } else {
    rep.verdict = Verdict::candidate_observation;
    rep.set_a = a.points();
    rep.set_b = b.points();
  }
  return rep;
}

}  // namespace conedens
