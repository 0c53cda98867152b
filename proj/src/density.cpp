#include "conedens/density.hpp"

#include <cmath>
#include <stdexcept>

#include "conedens/errors.hpp"

namespace conedens {

namespace {

// Running exact minimum of count/size ratios.  Counts and sizes are bounded
// by the grid volume (< 2^31), so the cross products fit in int64.
struct RatioMin {
  std::int64_t num = 1, den = 1;  // current minimum, starts at 1 = full ratio
  bool improves(std::int64_t cnt, std::int64_t size) const {
    return cnt * den < num * size;
  }
  void assign(std::int64_t cnt, std::int64_t size) {
    num = cnt;
    den = size;
  }
};

}  // namespace

DensityReport sigma_1d(const PointSet& a, int n_max) {
  const Box& box = a.box();
  if (box.dim() != 1) throw std::invalid_argument("sigma_1d: set is not 1-dimensional");
  const int n_box = box.bounds()[0];
  if (n_max == 0) n_max = n_box;
  if (n_max < 1 || n_max > n_box)
    throw std::invalid_argument("sigma_1d: n_max out of range");

  RatioMin best;
  int best_prefix = 0;
  std::int64_t count = 0;
  for (int n = 1; n <= n_max; ++n) {
    count += a.bits().get(static_cast<std::uint64_t>(n)) ? 1 : 0;
    if (best_prefix == 0 || best.improves(count, n)) {
      best.assign(count, n);
      best_prefix = n;
    }
  }
  std::vector<Point> witness;
  witness.reserve(static_cast<std::size_t>(best_prefix));
  for (int k = 1; k <= best_prefix; ++k) witness.push_back({k});
  return DensityReport{Rational(best.num, best.den),
                       OrderIdeal::unchecked(std::move(witness)),
                       static_cast<std::uint64_t>(n_max), box};
}

DensityReport sigma_ideal_family(const PointSet& a, std::uint64_t cap) {
  const Box& box = a.box();
  RatioMin best;
  bool have = false;
  std::vector<std::uint64_t> witness_idx;
  std::uint64_t family = 0;

  const BitGrid* tracked[] = {&a.bits()};
  for_each_ideal(box, cap, tracked, [&](const IdealCursor& cur) {
    ++family;
    const std::int64_t cnt = cur.tracked_counts[0];
    const std::int64_t size = static_cast<std::int64_t>(cur.size);
    if (!have || best.improves(cnt, size)) {
      best.assign(cnt, size);
      have = true;
      witness_idx.assign(cur.members.begin(), cur.members.end());
    }
    return true;
  });
  if (!have) throw std::logic_error("empty ideal family");  // boxes are nonempty

  std::vector<Point> pts;
  pts.reserve(witness_idx.size());
  for (std::uint64_t idx : witness_idx) pts.push_back(box.point_at(idx));
  return DensityReport{Rational(best.num, best.den),
                       OrderIdeal::unchecked(std::move(pts)), family, box};
}

int h0_for_half(const Rational& alpha) {
  if (alpha <= 0 || alpha > 1)
    throw std::invalid_argument("h0_for_half: alpha must be in (0, 1]");
  // least h with (1 - alpha)^h <= 1/2, i.e. 2 * num^h <= den^h
  const Rational r = 1 - alpha;
  const BigInt num = numerator(r), den = denominator(r);
  if (num == 0) return 1;

  const auto reaches_half = [&](int h) {
    using boost::multiprecision::pow;
    return 2 * pow(num, static_cast<unsigned>(h)) <=
           pow(den, static_cast<unsigned>(h));
  };

  // log estimate centers the search; the exact predicate settles the value
  const long double lr = std::log(num.convert_to<long double>()) -
                         std::log(den.convert_to<long double>());
  int h = std::max<int>(1, static_cast<int>(std::ceil(std::log(0.5L) / lr)));
  while (h > 1 && reaches_half(h - 1)) --h;
  while (!reaches_half(h)) ++h;
  return h;
}

}  // namespace conedens
