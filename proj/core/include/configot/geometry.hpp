#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace configot {

/// A point of R^k. The dimension k is fixed by the computation context;
/// operations that mix dimensions throw std::invalid_argument. Coordinates
/// must be finite (no NaN, no infinities).
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  static Point scalar(double x) { return Point({x}); }

  std::size_t dim() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<double>& coords() const noexcept { return coords_; }

  // Exact comparison. Sampled diffuse measures collide with probability
  // zero, so no epsilon is baked in; callers needing fuzzy comparison
  // supply their own.
  friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const Point& a, const Point& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<double> coords_;
};

/// Ground cost d(x, y) = ||x - y||^2 / 2 with the Euclidean norm.
/// Throws std::invalid_argument on dimension mismatch.
double half_sq_dist(const Point& x, const Point& y);

}  // namespace configot
