#include "reference.hpp"

#include <stdexcept>

namespace conedens::reference {

PointSet sumset_naive(const PointSet& a, const PointSet& b) {
  if (!(a.box() == b.box())) throw std::invalid_argument("box mismatch");
  const Box& box = a.box();
  std::vector<Point> as = a.points();
  std::vector<Point> bs = b.points();
  as.push_back(Point(static_cast<std::size_t>(box.dim()), 0));
  bs.push_back(Point(static_cast<std::size_t>(box.dim()), 0));

  PointSet out(box);
  for (const Point& pa : as)
    for (const Point& pb : bs) {
      const Point s = point_add(pa, pb);
      if (box.cone_contains(s)) out.insert(s);
    }
  return out;
}

PointSet hfold_naive(const PointSet& a, int h) {
  if (h < 1) throw std::invalid_argument("h must be >= 1");
  PointSet acc = a;
  for (int i = 1; i < h; ++i) acc = sumset_naive(acc, a);
  return acc;
}

std::vector<OrderIdeal> ideals_brute_force(const Box& box) {
  const std::uint64_t k = box.cone_size();
  if (k > 25) throw std::invalid_argument("cone too large for brute force");
  std::vector<Point> cone;
  for (std::uint64_t i = 1; i < box.volume(); ++i) cone.push_back(box.point_at(i));

  std::vector<OrderIdeal> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<Point> pts;
    for (std::uint64_t i = 0; i < k; ++i)
      if (mask & (std::uint64_t{1} << i)) pts.push_back(cone[i]);
    if (is_downward_closed(pts)) out.push_back(OrderIdeal::unchecked(std::move(pts)));
  }
  return out;
}

std::uint64_t downset_count_brute_force(const Box& box) {
  return ideals_brute_force(box).size() + 1;  // plus the empty set
}

Rational sigma_brute_force(const PointSet& a) {
  Rational best = 1;
  for (const OrderIdeal& j : ideals_brute_force(a.box())) {
    std::int64_t cnt = 0;
    for (const Point& p : j.points())
      if (a.contains(p)) ++cnt;
    const Rational ratio(cnt, static_cast<std::int64_t>(j.size()));
    if (ratio < best) best = ratio;
  }
  return best;
}

std::vector<int> primes_trial_division(int n_max) {
  std::vector<int> out;
  for (int v = 2; v <= n_max; ++v) {
    bool prime = true;
    for (int d = 2; d * d <= v; ++d)
      if (v % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(v);
  }
  return out;
}

std::vector<int> squares_by_root(int n_max) {
  std::vector<int> out;
  for (int v = 1; v * v <= n_max; ++v) out.push_back(v * v);
  return out;
}

}  // namespace conedens::reference
