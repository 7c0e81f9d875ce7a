#include "configot/matching.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "configot/assignment.hpp"
#include "configot/summation.hpp"

namespace configot {

namespace {

void check_dims(const Configuration& eta, const Configuration& omega) {
  if (!eta.empty() && !omega.empty() && eta.dim() != omega.dim()) {
    throw std::invalid_argument("config_cost: dimension mismatch between configurations");
  }
}

// Entries on demand below this size, one materialized matrix above.
constexpr std::size_t kOnDemandLimit = 64;

}  // namespace

ConfigCostResult config_cost(const Configuration& eta, const Configuration& omega) {
  check_dims(eta, omega);
  if (eta.size() != omega.size()) {
    return ConfigCostResult{ExtendedCost::infinite(), std::nullopt};
  }
  const std::size_t n = eta.size();
  if (n == 0) {
    return ConfigCostResult{ExtendedCost(0.0), Matching{{}, ExtendedCost(0.0)}};
  }

  AssignmentResult res;
  if (n <= kOnDemandLimit) {
    res = solve_assignment(
        n, [&](std::size_t i, std::size_t j) { return half_sq_dist(eta[i], omega[j]); });
  } else {
    std::vector<std::vector<double>> cost(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) cost[i][j] = half_sq_dist(eta[i], omega[j]);
    res = solve_assignment(cost);
  }

  Matching m{std::move(res.col_of_row), ExtendedCost(res.cost)};
  return ConfigCostResult{ExtendedCost(res.cost), std::move(m)};
}

ExtendedCost brute_force_cost(const Configuration& eta, const Configuration& omega) {
  check_dims(eta, omega);
  if (eta.size() != omega.size()) return ExtendedCost::infinite();
  const std::size_t n = eta.size();
  if (n > 8) {
    throw std::invalid_argument("brute_force_cost: cardinality cap (8) exceeded");
  }
  if (n == 0) return ExtendedCost(0.0);

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    std::vector<double> terms(n);
    for (std::size_t i = 0; i < n; ++i) terms[i] = half_sq_dist(eta[i], omega[perm[i]]);
    best = std::min(best, pairwise_sum(terms));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return ExtendedCost(best);
}

double symmetric_cost(std::span<const Point> x, std::span<const Point> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("symmetric_cost: tuple length mismatch");
  }
  Configuration eta(std::vector<Point>(x.begin(), x.end()));
  Configuration omega(std::vector<Point>(y.begin(), y.end()));
  return config_cost(eta, omega).cost.value();
}

}  // namespace configot
