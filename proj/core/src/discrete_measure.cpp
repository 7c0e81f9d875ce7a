#include "configot/discrete_measure.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "configot/summation.hpp"

namespace configot {

namespace {

void validate(const std::vector<Point>& atoms, const std::vector<double>& weights) {
  if (atoms.size() != weights.size()) {
    throw std::invalid_argument("DiscreteMeasure: atoms and weights must have equal length");
  }
  if (!atoms.empty()) {
    const std::size_t k = atoms.front().dim();
    for (const Point& p : atoms) {
      if (p.dim() != k) {
        throw std::invalid_argument("DiscreteMeasure: atoms must share one dimension");
      }
    }
  }
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument("DiscreteMeasure: weights must be finite and >= 0");
    }
  }
}

}  // namespace

DiscreteMeasure::DiscreteMeasure(std::vector<Point> atoms, std::vector<double> weights)
    : atoms_(std::move(atoms)), weights_(std::move(weights)) {
  validate(atoms_, weights_);
  total_mass_ = pairwise_sum(weights_);
}

DiscreteMeasure::DiscreteMeasure(std::vector<Point> atoms, std::vector<double> weights,
                                 double total_mass)
    : atoms_(std::move(atoms)), weights_(std::move(weights)), total_mass_(total_mass) {
  validate(atoms_, weights_);
  const double sum = pairwise_sum(weights_);
  if (std::abs(sum - total_mass_) > 1e-9 * std::max(1.0, std::abs(total_mass_))) {
    throw std::invalid_argument("DiscreteMeasure: declared total mass disagrees with weights");
  }
}

DiscreteMeasure DiscreteMeasure::uniform(std::vector<Point> atoms) {
  if (atoms.empty()) {
    throw std::invalid_argument("DiscreteMeasure::uniform: empty support");
  }
  std::vector<double> w(atoms.size(), 1.0 / static_cast<double>(atoms.size()));
  return DiscreteMeasure(std::move(atoms), std::move(w));
}

DiscreteMeasure DiscreteMeasure::normalized() const {
  if (total_mass_ <= 0.0) {
    throw std::domain_error("DiscreteMeasure::normalized: zero total mass");
  }
  std::vector<double> w(weights_);
  for (double& x : w) x /= total_mass_;
  return DiscreteMeasure(atoms_, std::move(w), 1.0);
}

}  // namespace configot
