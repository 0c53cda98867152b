#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace conedens {

// A lattice point of Z^n.  The positive cone is { x : x >= 0, x != 0 }.
using Point = std::vector<int>;

bool in_cone(const Point& x);
Point unit_vector(int n, int axis);  // e_{axis}, 0-based axis
Point point_add(const Point& a, const Point& b);
Point point_sub(const Point& a, const Point& b);
std::string point_str(const Point& x);  // "(1,2)"

// Which total order plays the role of the Szpilrajn extension of the
// rectangular order wherever one is needed.
enum class ExtensionRule {
  lexicographic,  // explicit lexicographic extension (default for the lattice)
  topo_sort,      // stable topological sort, ties broken by input position
};

struct ConeContext {
  int n = 1;
  ExtensionRule extension = ExtensionRule::lexicographic;
};

// Axis-aligned truncation of the cone: { x : 0 <= x_i <= m_i } minus the zero
// vector.  Linear indices are mixed-radix with the last coordinate fastest,
// so index order equals lexicographic order on coordinates and the zero
// vector is index 0.
class Box {
 public:
  explicit Box(std::vector<int> bounds);
  static Box line(int n_max) { return Box({n_max}); }

  int dim() const { return static_cast<int>(m_.size()); }
  const std::vector<int>& bounds() const { return m_; }
  std::uint64_t volume() const { return volume_; }          // grid points incl. zero
  std::uint64_t cone_size() const { return volume_ - 1; }   // grid minus zero

  bool grid_contains(const Point& x) const;  // 0 <= x_i <= m_i
  bool cone_contains(const Point& x) const;  // grid_contains and x != 0

  std::uint64_t index(const Point& x) const;
  Point point_at(std::uint64_t idx) const;

  // Row decomposition used by the dense sumset kernel: a row is a contiguous
  // run with all but the last coordinate fixed.
  std::uint64_t row_length() const { return static_cast<std::uint64_t>(m_.back()) + 1; }
  std::uint64_t row_count() const { return volume_ / row_length(); }

  bool operator==(const Box& o) const { return m_ == o.m_; }

 private:
  std::vector<int> m_;
  std::vector<std::uint64_t> stride_;
  std::uint64_t volume_ = 0;
};

}  // namespace conedens
