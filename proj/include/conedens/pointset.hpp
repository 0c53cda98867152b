#pragma once

#include <cstdint>
#include <vector>

#include "conedens/bitgrid.hpp"
#include "conedens/point.hpp"

namespace conedens {

// A subset of the boxed cone.  The zero vector is never a member; the
// {0}-augmentation of the sumset convention is applied inside the kernels.
class PointSet {
 public:
  explicit PointSet(Box box) : box_(std::move(box)), bits_(box_.volume()) {}
  PointSet(Box box, BitGrid bits) : box_(std::move(box)), bits_(std::move(bits)) {}

  static PointSet full(const Box& box);
  static PointSet of(const Box& box, const std::vector<Point>& pts);  // validates

  const Box& box() const { return box_; }
  const BitGrid& bits() const { return bits_; }

  std::uint64_t cardinality() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(const Point& x) const;
  bool contains_index(std::uint64_t idx) const { return bits_.get(idx); }
  void insert(const Point& x);  // throws if outside the boxed cone
  void insert_index(std::uint64_t idx);
  void erase(const Point& x);

  std::vector<Point> points() const;              // lexicographic order
  std::vector<std::uint64_t> indices() const;     // ascending

  bool is_subset_of(const PointSet& o) const;
  bool operator==(const PointSet& o) const;

 private:
  Box box_;
  BitGrid bits_;
};

// ((A ∪ {0}) + (B ∪ {0})) minus the zero vector, inside the box.  For any x
// in the boxed cone every decomposition x = a + b with a, b >= 0 stays inside
// the box, so the truncation loses nothing.  OpenMP-parallel over the members
// of A for large instances; the result is independent of the schedule.
PointSet sumset(const PointSet& a, const PointSet& b);

// h-fold augmented sumset.  h >= 1.
PointSet hfold(const PointSet& a, int h);

// |{ a in A : a <= x }| under the rectangular order; x must be in the box.
std::int64_t counting_function(const PointSet& a, const Point& x);

}  // namespace conedens
