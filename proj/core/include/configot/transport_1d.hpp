#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "configot/configuration.hpp"
#include "configot/discrete_measure.hpp"
#include "configot/geometry.hpp"
#include "configot/summation.hpp"

namespace configot {

/// A nondecreasing piecewise-linear map t: R -> R given by breakpoints and
/// values, the discrete form of t = F2^{-1} o F1. Outside the breakpoint
/// range the map is held constant at the boundary value, which keeps lifted
/// costs finite; the theorems never evaluate t off the source support.
class MonotoneMap1D {
 public:
  MonotoneMap1D(std::vector<double> breakpoints, std::vector<double> values);

  double operator()(double x) const;
  Point operator()(const Point& p) const;

  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

struct Quantile1DResult {
  double cost = 0.0;  // (1/(2M)) sum_i (q1_i - q2_i)^2
  MonotoneMap1D map;
};

/// Quadratic-cost transport on R between two measures given as sorted
/// quantile grids of equal length M (values q(u_i) at u_i = (i+1/2)/M, or
/// simply the sorted atoms of an M-point empirical measure). The monotone
/// coupling is optimal, so the cost is the Riemann sum of
/// (1/2) int_0^1 (F1^{-1} - F2^{-1})^2 du and the map pushes the source grid
/// onto the target grid. Ties in the source grid keep the largest target
/// value (left-continuous quantile convention on the inputs).
Quantile1DResult solve_1d_quadratic(std::span<const double> mu_quantiles,
                                    std::span<const double> nu_quantiles);

/// Quantile grid of a 1-D discrete measure at midpoints u_i = (i+1/2)/m,
/// using the left-continuous quantile function (ties from atoms resolve to
/// the atom itself).
std::vector<double> quantile_grid(const DiscreteMeasure& measure, std::size_t m);

/// Applies a point map to every atom: t^Gamma(eta) = sum of Diracs at t(x).
template <class MapFn>
Configuration lift_map(MapFn&& t, const Configuration& eta) {
  std::vector<Point> moved;
  moved.reserve(eta.size());
  for (const Point& x : eta) moved.push_back(t(x));
  return Configuration(std::move(moved));
}

/// Lifted potential: sum over atoms of phi(x); 0 on the empty configuration.
template <class PotentialFn>
double lift_potential(PotentialFn&& phi, const Configuration& eta) {
  std::vector<double> terms;
  terms.reserve(eta.size());
  for (const Point& x : eta) terms.push_back(phi(x));
  return pairwise_sum(terms);
}

}  // namespace configot
