#pragma once

#include <span>
#include <unordered_map>
#include <vector>

#include "conedens/point.hpp"

namespace conedens {

// Rectangular (coordinatewise) partial order on Z^n.
bool leq_rect(const Point& x, const Point& y);
bool lt_rect(const Point& x, const Point& y);

// Lexicographic total order; extends the rectangular order.
bool leq_lex(const Point& x, const Point& y);
bool lt_lex(const Point& x, const Point& y);

// { z : 0 < z < x } under the rectangular order, in lexicographic order.
// Size is prod(x_i + 1) - 2; empty exactly when x is an atom.
std::vector<Point> open_interval_below(const Point& x);

// True iff every open interval below a member lies inside the set.
// Precondition: all points in the cone.  Vacuously true for the empty set.
bool is_downward_closed(std::span<const Point> pts);

// The unit vectors e_1..e_n: the atoms of the lattice cone.
std::vector<Point> atoms(int n);

// A nonempty downward-closed finite subset of the cone, stored in
// lexicographic order.
class OrderIdeal {
 public:
  // Validates: nonempty, cone membership, downward closure.
  static OrderIdeal from_points(std::vector<Point> pts);
  // For internally generated sets that are downward closed by construction.
  static OrderIdeal unchecked(std::vector<Point> sorted_pts);

  std::size_t size() const { return pts_.size(); }
  const std::vector<Point>& points() const { return pts_; }
  bool contains(const Point& x) const;
  bool operator==(const OrderIdeal& o) const { return pts_ == o.pts_; }

 private:
  OrderIdeal() = default;
  std::vector<Point> pts_;
};

// Smallest downward-closed superset of the seed inside the cone.
OrderIdeal downward_closure(std::span<const Point> seed);

struct PointHash {
  std::size_t operator()(const Point& p) const {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ p.size();
    for (int v : p) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
    return h;
  }
};

// A total order on a finite point set extending the rectangular order.
class LinearExtension {
 public:
  explicit LinearExtension(std::vector<Point> by_rank);

  std::size_t size() const { return by_rank_.size(); }
  const std::vector<Point>& points_by_rank() const { return by_rank_; }
  int rank_of(const Point& x) const;  // throws std::invalid_argument if absent
  bool before(const Point& x, const Point& y) const { return rank_of(x) <= rank_of(y); }

 private:
  std::vector<Point> by_rank_;
  std::unordered_map<Point, int, PointHash> rank_;
};

// Total order on S extending the rectangular order.  With
// ExtensionRule::lexicographic the result is the lexicographic order
// restricted to S; with topo_sort it is a stable Kahn sort with ties broken
// by input position.  Duplicate input points are collapsed.
LinearExtension szpilrajn_extension(std::vector<Point> pts, const ConeContext& ctx);

}  // namespace conedens
