#include "configot/extended_cost.hpp"

#include <cmath>
#include <stdexcept>

namespace configot {

ExtendedCost::ExtendedCost(double value) : value_(value), finite_(true) {
  if (!std::isfinite(value) || value < 0.0) {
    throw std::invalid_argument("ExtendedCost: finite values must be >= 0");
  }
}

double ExtendedCost::value() const {
  if (!finite_) {
    throw std::domain_error("ExtendedCost: value() called on infinite cost");
  }
  return value_;
}

ExtendedCost& ExtendedCost::operator+=(const ExtendedCost& other) {
  if (!finite_ || !other.finite_) {
    finite_ = false;
    value_ = 0.0;
  } else {
    value_ += other.value_;
  }
  return *this;
}

}  // namespace configot
