#include "configot/configuration.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace configot {

Configuration::Configuration(std::vector<Point> points, bool require_simple)
    : points_(std::move(points)) {
  if (points_.empty()) return;
  const std::size_t k = points_.front().dim();
  for (const Point& p : points_) {
    if (p.dim() != k) {
      throw std::invalid_argument("Configuration: atoms must share one dimension");
    }
  }
  // Duplicate detection via lexicographic sort of atom indices.
  std::vector<std::size_t> order(points_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return points_[a] < points_[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (points_[order[i - 1]] == points_[order[i]]) {
      simple_ = false;
      break;
    }
  }
  if (require_simple && !simple_) {
    throw std::invalid_argument("Configuration: duplicate atoms in a simple configuration");
  }
}

Configuration validate_configuration(std::vector<Point> points, bool require_simple) {
  return Configuration(std::move(points), require_simple);
}

}  // namespace configot
