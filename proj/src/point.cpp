#include "conedens/point.hpp"

#include <stdexcept>

namespace conedens {

namespace {
// Bit grids of this size are allocated per thread in the kernels; keep the
// worst case at a few hundred MB.
constexpr std::uint64_t kMaxVolume = std::uint64_t{1} << 31;
}  // namespace

bool in_cone(const Point& x) {
  bool nonzero = false;
  for (int v : x) {
    if (v < 0) return false;
    if (v > 0) nonzero = true;
  }
  return nonzero && !x.empty();
}

Point unit_vector(int n, int axis) {
  Point e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(axis)] = 1;
  return e;
}

Point point_add(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point point_sub(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

std::string point_str(const Point& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(x[i]);
  }
  s += ')';
  return s;
}

Box::Box(std::vector<int> bounds) : m_(std::move(bounds)) {
  if (m_.empty()) throw std::invalid_argument("box dimension must be >= 1");
  volume_ = 1;
  for (int b : m_) {
    if (b < 1) throw std::invalid_argument("box bounds must be >= 1");
    const std::uint64_t side = static_cast<std::uint64_t>(b) + 1;
    if (volume_ > kMaxVolume / side)
      throw std::invalid_argument("box too large: grid volume exceeds 2^31");
    volume_ *= side;
  }
  stride_.assign(m_.size(), 1);
  for (std::size_t i = m_.size(); i-- > 1;)
    stride_[i - 1] = stride_[i] * (static_cast<std::uint64_t>(m_[i]) + 1);
}

bool Box::grid_contains(const Point& x) const {
  if (x.size() != m_.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < 0 || x[i] > m_[i]) return false;
  return true;
}

bool Box::cone_contains(const Point& x) const {
  return grid_contains(x) && in_cone(x);
}

std::uint64_t Box::index(const Point& x) const {
  if (!grid_contains(x)) throw std::invalid_argument("point outside box: " + point_str(x));
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    idx += static_cast<std::uint64_t>(x[i]) * stride_[i];
  return idx;
}

Point Box::point_at(std::uint64_t idx) const {
  if (idx >= volume_) throw std::invalid_argument("index outside box");
  Point x(m_.size());
  for (std::size_t i = 0; i < m_.size(); ++i) {
    x[i] = static_cast<int>(idx / stride_[i]);
    idx %= stride_[i];
  }
  return x;
}

}  // namespace conedens
