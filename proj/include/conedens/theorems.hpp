#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "conedens/density.hpp"
#include "conedens/order.hpp"
#include "conedens/pointset.hpp"
#include "conedens/rational.hpp"

namespace conedens {

// Every checker distinguishes a failed hypothesis from a falsified claim:
// randomized suites must not count vacuous cases as passes.
enum class Verdict {
  holds,
  hypothesis_not_met,
  violated,
  candidate_observation,  // Mann explorer in n >= 2: reported, never asserted
};

std::string_view verdict_str(Verdict v);

// --------------------------------------------------------------------------
// Pigeonhole decompositions

struct Decomposition {
  Point a;
  Point b;
  bool direct;  // x itself was in A or B; the other summand is the zero vector
};

// 1D: requires sigma(A) + sigma(B) >= 1 over [1..n_max]; returns a in A∪{0},
// b in B∪{0} with a + b = x.  "Covered directly" (direct = true) when x is
// already a member of A or B.
Decomposition pigeonhole_decompose_1d(const PointSet& a, const PointSet& b,
                                      int x, int n_max = 0);

// General dimension: requires sigma(A) + sigma(B) > 1 (strict) and x a
// non-atom of the boxed cone; returns a in A, b in B with a + b = x, found by
// intersecting A ∩ (0,x) with x - (B ∩ (0,x)).
Decomposition pigeonhole_decompose(const PointSet& a, const PointSet& b,
                                   const Point& x,
                                   std::uint64_t cap = kDefaultIdealCap);

// --------------------------------------------------------------------------
// Covering (AB = G+ ∪ {e})

struct CoverReport {
  Verdict verdict;
  Rational alpha, beta;
  bool atoms_present;        // atoms ⊆ A ∪ B
  bool density_sum_exceeds;  // alpha + beta > 1
  std::vector<Point> missing;  // nonempty would falsify the implementation
  std::uint64_t family_size;
  std::string note;
};

CoverReport cover_check(const PointSet& a, const PointSet& b,
                        std::uint64_t cap = kDefaultIdealCap);

// --------------------------------------------------------------------------
// The partition of J \ B

struct PartitionPart {
  Point anchor;                // b_ell in B
  std::vector<Point> members;  // J_ell, lexicographic order
};

struct PartitionCertificate {
  OrderIdeal j;
  PointSet b_used;
  std::vector<PartitionPart> parts;  // sorted by anchor, lexicographically
  LinearExtension extension;         // the total order used for b*(x)
  ExtensionRule rule;

  // Re-verifies every certificate invariant; returns human-readable
  // violations, empty when the certificate is valid.
  std::vector<std::string> check() const;
};

// Groups J* = J \ B by the extension-maximum of B ∩ (0,x).  Throws
// HypothesisError when J* is empty or some x in J* has empty B ∩ (0,x).
PartitionCertificate partition_j_star(const OrderIdeal& j, const PointSet& b,
                                      const ConeContext& ctx);

// --------------------------------------------------------------------------
// Density inequalities

struct IdealMargin {
  std::vector<Point> ideal;
  Rational margin;  // |C∩J|/|J| - bound
};

struct InequalityReport {
  Rational alpha, beta;
  Rational bound;    // alpha + beta - alpha*beta
  Rational sigma_c;  // box-relative density of A + B
  Verdict verdict;   // holds unless the implementation is broken
  std::uint64_t family_size;
  Rational min_margin;                 // sigma_c - bound, exact
  std::vector<Point> min_margin_ideal;
  std::vector<IdealMargin> margins;    // first margin_capture ideals
  bool margins_complete;
};

// Checks sigma(A+B) >= alpha + beta - alpha*beta globally and per ideal.
// margin_capture limits how many per-ideal margins are stored in the report;
// all of them are always checked.
InequalityReport verify_shnirelman(const PointSet& a, const PointSet& b,
                                   std::uint64_t cap = kDefaultIdealCap,
                                   std::uint64_t margin_capture = 0);

struct ProductBoundReport {
  std::vector<Rational> alphas;
  Rational sigma_product;  // sigma of A_1 + ... + A_h
  Rational lhs;            // 1 - sigma_product
  Rational rhs;            // prod (1 - alpha_i)
  Verdict verdict;
  std::uint64_t family_size;
};

// 1 - sigma(A_1 + ... + A_h) <= prod(1 - sigma(A_i)), h >= 2.
ProductBoundReport verify_product_bound(std::span<const PointSet> sets,
                                        std::uint64_t cap = kDefaultIdealCap);

// --------------------------------------------------------------------------
// Basis order

struct BasisReport {
  enum class Outcome { found, not_within_h_max, not_a_basis };
  Outcome outcome;
  int order = 0;        // valid when outcome == found
  int h_max = 0;
  int fixpoint_h = 0;   // h at which hA stopped growing (not_a_basis)
  Rational alpha;
  bool h0_known = false;
  int h0 = 0;           // h0_for_half(alpha), when alpha > 0
  bool bound_ok = true; // order <= 2*h0 when both known
  Verdict verdict;
};

// Least h <= h_max with hA covering the boxed cone.  "Not a basis" is a
// value, not an error: the fold sequence reached a fixpoint short of the
// cone.  When alpha > 0 the result is checked against the 2*h0 bound.
BasisReport basis_order(const PointSet& a, int h_max,
                        std::uint64_t cap = kDefaultIdealCap);

// --------------------------------------------------------------------------
// Mann explorer

struct MannReport {
  int dim;
  bool asserted;  // true in 1D where Mann's theorem applies
  Rational alpha, beta;
  Rational bound;    // min(1, alpha + beta)
  Rational sigma_c;
  Verdict verdict;   // 1D: holds/violated; nD: holds/candidate_observation
  std::uint64_t family_size;
  // reproduction data, recorded when the nD comparison falls short
  std::vector<Point> set_a, set_b;
};

// 1D: asserts sigma(A+B) >= min(1, alpha+beta).  n >= 2: computes both sides
// over the box-relative family and only reports the comparison; a shortfall
// is a candidate observation for the open problem, never a failure.
MannReport mann_check(const PointSet& a, const PointSet& b,
                      std::uint64_t cap = kDefaultIdealCap);

}  // namespace conedens
