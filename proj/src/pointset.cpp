#include "conedens/pointset.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

#include "conedens/order.hpp"

namespace conedens {

PointSet PointSet::full(const Box& box) {
  PointSet s(box);
  for (std::uint64_t i = 1; i < box.volume(); ++i) s.bits_.set(i);
  return s;
}

PointSet PointSet::of(const Box& box, const std::vector<Point>& pts) {
  PointSet s(box);
  for (const Point& p : pts) s.insert(p);
  return s;
}

bool PointSet::contains(const Point& x) const {
  return box_.cone_contains(x) && bits_.get(box_.index(x));
}

void PointSet::insert(const Point& x) {
  if (!box_.cone_contains(x))
    throw std::invalid_argument("point outside boxed cone: " + point_str(x));
  bits_.set(box_.index(x));
}

void PointSet::insert_index(std::uint64_t idx) {
  if (idx == 0 || idx >= box_.volume())
    throw std::invalid_argument("index outside boxed cone");
  bits_.set(idx);
}

void PointSet::erase(const Point& x) {
  if (box_.cone_contains(x)) bits_.reset(box_.index(x));
}

std::vector<Point> PointSet::points() const {
  std::vector<Point> out;
  out.reserve(bits_.count());
  bits_.for_each_set([&](std::uint64_t idx) { out.push_back(box_.point_at(idx)); });
  return out;
}

std::vector<std::uint64_t> PointSet::indices() const {
  std::vector<std::uint64_t> out;
  out.reserve(bits_.count());
  bits_.for_each_set([&](std::uint64_t idx) { out.push_back(idx); });
  return out;
}

bool PointSet::is_subset_of(const PointSet& o) const {
  if (!(box_ == o.box_)) throw std::invalid_argument("box mismatch");
  return bits_.is_subset_of(o.bits_);
}

bool PointSet::operator==(const PointSet& o) const {
  return box_ == o.box_ && bits_ == o.bits_;
}

namespace {

// Accumulates B translated by one member of A into acc, row by row.  A row is
// a run with the last coordinate free; translating by `a` shifts bits within
// the row by a's last coordinate and moves the row by the leading ones.
// Rows whose image leaves the box are dropped; within a row the shift is
// clipped, which is exactly the box truncation.
void accumulate_translates(BitGrid& acc, const BitGrid& bsrc, const Box& box,
                           const std::vector<std::uint64_t>& amembers,
                           std::size_t lo, std::size_t hi) {
  const std::uint64_t rowlen = box.row_length();
  const std::uint64_t nrows = box.row_count();
  const int n = box.dim();
  const auto& m = box.bounds();

  std::vector<int> rowpt(static_cast<std::size_t>(n), 0);  // leading coords of src row
  for (std::size_t ai = lo; ai < hi; ++ai) {
    const Point a = box.point_at(amembers[ai]);
    const int alast = a[static_cast<std::size_t>(n) - 1];
    const std::uint64_t len = rowlen - static_cast<std::uint64_t>(alast);
    std::fill(rowpt.begin(), rowpt.end(), 0);
    for (std::uint64_t r = 0; r < nrows; ++r) {
      // destination row: leading coordinates shifted by a
      bool inside = true;
      std::uint64_t dst_row = 0;
      for (int i = 0; i + 1 < n; ++i) {
        const int v = rowpt[static_cast<std::size_t>(i)] + a[static_cast<std::size_t>(i)];
        if (v > m[static_cast<std::size_t>(i)]) {
          inside = false;
          break;
        }
        dst_row = dst_row * (static_cast<std::uint64_t>(m[static_cast<std::size_t>(i)]) + 1) +
                  static_cast<std::uint64_t>(v);
      }
      const std::uint64_t src_base = r * rowlen;
      if (inside && bsrc.any_in_range(src_base, len))
        acc.or_shifted_range(bsrc, src_base, len,
                             dst_row * rowlen + static_cast<std::uint64_t>(alast));
      // next source row (odometer over the leading coordinates)
      for (int i = n - 2; i >= 0; --i) {
        auto& c = rowpt[static_cast<std::size_t>(i)];
        if (c < m[static_cast<std::size_t>(i)]) {
          ++c;
          break;
        }
        c = 0;
      }
    }
  }
}

}  // namespace

PointSet sumset(const PointSet& a, const PointSet& b) {
  if (!(a.box() == b.box())) throw std::invalid_argument("box mismatch");
  const Box& box = a.box();

  BitGrid out(box.volume());
  out |= a.bits();  // b = 0
  out |= b.bits();  // a = 0

  const std::vector<std::uint64_t> amembers = a.indices();
  if (!amembers.empty() && b.bits().any()) {
    const std::uint64_t work =
        amembers.size() * box.row_count() * (box.row_length() / 64 + 1);
    const int max_threads = omp_get_max_threads();
    if (work > (1u << 15) && max_threads > 1 && amembers.size() > 1) {
      #pragma omp parallel
      {
        BitGrid acc(box.volume());
        const int nt = omp_get_num_threads();
        const int tid = omp_get_thread_num();
        const std::size_t chunk = (amembers.size() + nt - 1) / nt;
        const std::size_t lo = std::min(amembers.size(), chunk * tid);
        const std::size_t hi = std::min(amembers.size(), lo + chunk);
        accumulate_translates(acc, b.bits(), box, amembers, lo, hi);
        #pragma omp critical
        out |= acc;
      }
    } else {
      accumulate_translates(out, b.bits(), box, amembers, 0, amembers.size());
    }
  }

  out.reset(0);
  return PointSet(box, std::move(out));
}

PointSet hfold(const PointSet& a, int h) {
  if (h < 1) throw std::invalid_argument("hfold: h must be >= 1");
  PointSet acc = a;
  for (int i = 1; i < h; ++i) {
    PointSet next = sumset(acc, a);
    if (next == acc) return acc;  // fixpoint: all further folds are equal
    acc = std::move(next);
  }
  return acc;
}

std::int64_t counting_function(const PointSet& a, const Point& x) {
  if (!a.box().grid_contains(x))
    throw std::invalid_argument("point outside box: " + point_str(x));
  std::int64_t count = 0;
  a.bits().for_each_set([&](std::uint64_t idx) {
    if (leq_rect(a.box().point_at(idx), x)) ++count;
  });
  return count;
}

}  // namespace conedens
