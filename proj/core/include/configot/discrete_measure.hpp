#pragma once

#include <cstddef>
#include <vector>

#include "configot/geometry.hpp"

namespace configot {

/// A finite nonnegative measure given by weighted atoms. Serves both as a
/// discretized intensity and as an (empirical) probability measure. The
/// stored total mass must agree with the weight sum to 1e-9 relative.
class DiscreteMeasure {
 public:
  DiscreteMeasure() = default;

  /// Total mass is the (pairwise) sum of the weights.
  DiscreteMeasure(std::vector<Point> atoms, std::vector<double> weights);

  /// Checks the declared total mass against the weight sum.
  DiscreteMeasure(std::vector<Point> atoms, std::vector<double> weights, double total_mass);

  /// Uniform probability measure on the given atoms (weights 1/n).
  static DiscreteMeasure uniform(std::vector<Point> atoms);

  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }
  std::size_t dim() const noexcept { return atoms_.empty() ? 0 : atoms_.front().dim(); }
  const Point& atom(std::size_t i) const { return atoms_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }
  const std::vector<Point>& atoms() const noexcept { return atoms_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  double total_mass() const noexcept { return total_mass_; }

  /// Same atoms rescaled to total mass 1. Throws on zero mass.
  DiscreteMeasure normalized() const;

 private:
  std::vector<Point> atoms_;
  std::vector<double> weights_;
  double total_mass_ = 0.0;
};

}  // namespace configot
