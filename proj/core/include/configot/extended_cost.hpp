#pragma once

namespace configot {

/// A nonnegative cost that may be infinite. Unequal-mass configurations have
/// infinite transport cost, so infinity is a first-class value here: it is an
/// explicit tag rather than a sentinel double, which keeps serialization
/// unambiguous. Addition absorbs into infinity and comparison treats infinity
/// as larger than every finite value.
class ExtendedCost {
 public:
  ExtendedCost() : value_(0.0), finite_(true) {}
  ExtendedCost(double value);  // throws if value is negative or non-finite

  static ExtendedCost infinite() {
    ExtendedCost c;
    c.finite_ = false;
    return c;
  }

  bool is_finite() const noexcept { return finite_; }
  /// Finite value; throws std::domain_error when infinite.
  double value() const;
  double value_or(double fallback) const noexcept { return finite_ ? value_ : fallback; }

  ExtendedCost& operator+=(const ExtendedCost& other);
  friend ExtendedCost operator+(ExtendedCost a, const ExtendedCost& b) { return a += b; }

  friend bool operator==(const ExtendedCost& a, const ExtendedCost& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend bool operator<(const ExtendedCost& a, const ExtendedCost& b) {
    if (!b.finite_) return a.finite_;
    if (!a.finite_) return false;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const ExtendedCost& a, const ExtendedCost& b) { return a < b || a == b; }

  friend ExtendedCost min(const ExtendedCost& a, const ExtendedCost& b) { return a < b ? a : b; }

 private:
  double value_;
  bool finite_;
};

}  // namespace configot
