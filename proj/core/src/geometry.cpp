#include "configot/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace configot {

namespace {

void check_finite(const std::vector<double>& coords) {
  for (double c : coords) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument("Point: coordinates must be finite");
    }
  }
}

}  // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  check_finite(coords_);
}

Point::Point(std::initializer_list<double> coords) : coords_(coords) {
  check_finite(coords_);
}

double half_sq_dist(const Point& x, const Point& y) {
  if (x.dim() != y.dim()) {
    throw std::invalid_argument("half_sq_dist: dimension mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const double d = x[i] - y[i];
    s += d * d;
  }
  return 0.5 * s;
}

}  // namespace configot
