#include "conedens/order.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace conedens {

namespace {

void require_same_dim(const Point& x, const Point& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("dimension mismatch: " + point_str(x) + " vs " +
                                point_str(y));
}

}  // namespace

bool leq_rect(const Point& x, const Point& y) {
  require_same_dim(x, y);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

bool lt_rect(const Point& x, const Point& y) { return leq_rect(x, y) && x != y; }

bool leq_lex(const Point& x, const Point& y) {
  require_same_dim(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < y[i]) return true;
    if (x[i] > y[i]) return false;
  }
  return true;  // equal
}

bool lt_lex(const Point& x, const Point& y) { return leq_lex(x, y) && x != y; }

std::vector<Point> open_interval_below(const Point& x) {
  if (!in_cone(x)) throw std::invalid_argument("point not in cone: " + point_str(x));
  std::vector<Point> out;
  Point z(x.size(), 0);
  // odometer over the closed grid [0, x], skipping the endpoints
  for (;;) {
    if (in_cone(z) && z != x) out.push_back(z);
    std::size_t i = z.size();
    while (i-- > 0) {
      if (z[i] < x[i]) {
        ++z[i];
        break;
      }
      z[i] = 0;
      if (i == 0) return out;
    }
  }
}

bool is_downward_closed(std::span<const Point> pts) {
  std::unordered_set<Point, PointHash> have;
  for (const Point& p : pts) {
    if (!in_cone(p)) throw std::invalid_argument("point not in cone: " + point_str(p));
    have.insert(p);
  }
  for (const Point& p : pts)
    for (const Point& z : open_interval_below(p))
      if (!have.count(z)) return false;
  return true;
}

std::vector<Point> atoms(int n) {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(unit_vector(n, i));
  return out;
}

OrderIdeal OrderIdeal::from_points(std::vector<Point> pts) {
  if (pts.empty()) throw std::invalid_argument("order ideal must be nonempty");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (!is_downward_closed(pts))
    throw std::invalid_argument("point set is not downward closed");
  OrderIdeal j;
  j.pts_ = std::move(pts);
  return j;
}

OrderIdeal OrderIdeal::unchecked(std::vector<Point> sorted_pts) {
  OrderIdeal j;
  j.pts_ = std::move(sorted_pts);
  return j;
}

bool OrderIdeal::contains(const Point& x) const {
  return std::binary_search(pts_.begin(), pts_.end(), x);
}

OrderIdeal downward_closure(std::span<const Point> seed) {
  if (seed.empty()) throw std::invalid_argument("downward_closure: empty seed");
  std::unordered_set<Point, PointHash> acc;
  for (const Point& p : seed) {
    if (!in_cone(p)) throw std::invalid_argument("point not in cone: " + point_str(p));
    acc.insert(p);
    for (Point& z : open_interval_below(p)) acc.insert(std::move(z));
  }
  std::vector<Point> pts(acc.begin(), acc.end());
  std::sort(pts.begin(), pts.end());
  return OrderIdeal::unchecked(std::move(pts));
}

LinearExtension::LinearExtension(std::vector<Point> by_rank)
    : by_rank_(std::move(by_rank)) {
  rank_.reserve(by_rank_.size());
  for (std::size_t i = 0; i < by_rank_.size(); ++i)
    rank_.emplace(by_rank_[i], static_cast<int>(i));
  if (rank_.size() != by_rank_.size())
    throw std::invalid_argument("linear extension: duplicate points");
}

int LinearExtension::rank_of(const Point& x) const {
  auto it = rank_.find(x);
  if (it == rank_.end())
    throw std::invalid_argument("point not in extension domain: " + point_str(x));
  return it->second;
}

LinearExtension szpilrajn_extension(std::vector<Point> pts, const ConeContext& ctx) {
  // collapse duplicates, keeping first occurrence for topo tie-breaks
  std::unordered_set<Point, PointHash> seen;
  std::vector<Point> uniq;
  uniq.reserve(pts.size());
  for (Point& p : pts)
    if (seen.insert(p).second) uniq.push_back(std::move(p));

  if (ctx.extension == ExtensionRule::lexicographic) {
    std::sort(uniq.begin(), uniq.end(), lt_lex);
    return LinearExtension(std::move(uniq));
  }

  // Kahn's algorithm on the rectangular order restricted to the set,
  // always emitting the smallest-input-index available element.
  const std::size_t k = uniq.size();
  std::vector<bool> placed(k, false);
  std::vector<Point> out;
  out.reserve(k);
  for (std::size_t step = 0; step < k; ++step) {
    std::size_t pick = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (placed[i]) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < k && minimal; ++j)
        if (j != i && !placed[j] && lt_rect(uniq[j], uniq[i])) minimal = false;
      if (minimal) {
        pick = i;
        break;
      }
    }
    if (pick == k) throw std::logic_error("szpilrajn: no minimal element (cycle?)");
    placed[pick] = true;
    out.push_back(uniq[pick]);
  }
  return LinearExtension(std::move(out));
}

}  // namespace conedens
