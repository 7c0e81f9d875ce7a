#pragma once

#include <cstddef>
#include <vector>

#include "configot/geometry.hpp"

namespace configot {

/// A finite configuration eta = sum of Dirac masses at its atoms. Atoms may
/// repeat (a multiset); `simple()` reports whether they are pairwise
/// distinct. All atoms share one dimension.
class Configuration {
 public:
  Configuration() = default;  // empty configuration, n = 0

  /// Validates finiteness and a common dimension, and computes the simple
  /// flag. With require_simple, duplicate atoms are an error.
  explicit Configuration(std::vector<Point> points, bool require_simple = false);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  bool simple() const noexcept { return simple_; }
  /// Dimension of the atoms; 0 for the empty configuration.
  std::size_t dim() const noexcept { return points_.empty() ? 0 : points_.front().dim(); }

  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const noexcept { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

 private:
  std::vector<Point> points_;
  bool simple_ = true;
};

/// Checks finiteness of coordinates, a common dimension, and recomputes the
/// simple flag; throws when require_simple is set and atoms repeat.
Configuration validate_configuration(std::vector<Point> points, bool require_simple = false);

}  // namespace configot
