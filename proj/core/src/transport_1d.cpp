#include "configot/transport_1d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace configot {

MonotoneMap1D::MonotoneMap1D(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.empty() || breakpoints_.size() != values_.size()) {
    throw std::invalid_argument("MonotoneMap1D: need equal, nonzero breakpoint/value counts");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (breakpoints_[i] < breakpoints_[i - 1] || values_[i] < values_[i - 1]) {
      throw std::invalid_argument("MonotoneMap1D: breakpoints and values must be nondecreasing");
    }
  }
}

double MonotoneMap1D::operator()(double x) const {
  if (x <= breakpoints_.front()) return values_.front();
  if (x >= breakpoints_.back()) return values_.back();
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  const std::size_t hi = static_cast<std::size_t>(it - breakpoints_.begin());
  const std::size_t lo = hi - 1;
  const double dx = breakpoints_[hi] - breakpoints_[lo];
  if (dx <= 0.0) return values_[hi];
  const double s = (x - breakpoints_[lo]) / dx;
  return values_[lo] + s * (values_[hi] - values_[lo]);
}

Point MonotoneMap1D::operator()(const Point& p) const {
  if (p.dim() != 1) {
    throw std::invalid_argument("MonotoneMap1D: expects 1-D points");
  }
  return Point::scalar((*this)(p[0]));
}

Quantile1DResult solve_1d_quadratic(std::span<const double> mu_quantiles,
                                    std::span<const double> nu_quantiles) {
  if (mu_quantiles.empty() || mu_quantiles.size() != nu_quantiles.size()) {
    throw std::invalid_argument("solve_1d_quadratic: need equal, nonzero grid sizes");
  }
  const std::size_t m = mu_quantiles.size();
  for (std::size_t i = 1; i < m; ++i) {
    if (mu_quantiles[i] < mu_quantiles[i - 1] || nu_quantiles[i] < nu_quantiles[i - 1]) {
      throw std::invalid_argument("solve_1d_quadratic: quantile grids must be sorted");
    }
  }

  std::vector<double> sq(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double d = mu_quantiles[i] - nu_quantiles[i];
    sq[i] = d * d;
  }
  const double cost = pairwise_sum(sq) / (2.0 * static_cast<double>(m));

  // Collapse source ties so the map is a function; the last pair of a tie
  // block wins, i.e. an atom of the source is sent to the upper end of its
  // target interval.
  std::vector<double> bx, by;
  bx.reserve(m);
  by.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!bx.empty() && bx.back() == mu_quantiles[i]) {
      by.back() = nu_quantiles[i];
    } else {
      bx.push_back(mu_quantiles[i]);
      by.push_back(nu_quantiles[i]);
    }
  }
  return Quantile1DResult{cost, MonotoneMap1D(std::move(bx), std::move(by))};
}

std::vector<double> quantile_grid(const DiscreteMeasure& measure, std::size_t m) {
  if (measure.empty() || measure.dim() != 1) {
    throw std::invalid_argument("quantile_grid: measure must be 1-D and nonempty");
  }
  if (m == 0) {
    throw std::invalid_argument("quantile_grid: m must be positive");
  }
  std::vector<std::pair<double, double>> atoms(measure.size());
  for (std::size_t i = 0; i < measure.size(); ++i) {
    atoms[i] = {measure.atom(i)[0], measure.weight(i)};
  }
  std::sort(atoms.begin(), atoms.end());

  std::vector<double> grid(m);
  const double total = measure.total_mass();
  std::size_t a = 0;
  double cum = atoms.empty() ? 0.0 : atoms[0].second;
  for (std::size_t i = 0; i < m; ++i) {
    const double target = total * (static_cast<double>(i) + 0.5) / static_cast<double>(m);
    while (a + 1 < atoms.size() && cum < target) {
      ++a;
      cum += atoms[a].second;
    }
    grid[i] = atoms[a].first;
  }
  return grid;
}

}  // namespace configot
