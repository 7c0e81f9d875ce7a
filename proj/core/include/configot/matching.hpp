#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "configot/configuration.hpp"
#include "configot/extended_cost.hpp"
#include "configot/geometry.hpp"

namespace configot {

/// An optimal pairing between two equal-cardinality configurations:
/// atom i of the source goes to atom permutation[i] of the target.
struct Matching {
  std::vector<std::size_t> permutation;
  ExtendedCost cost;
};

struct ConfigCostResult {
  ExtendedCost cost;
  std::optional<Matching> matching;  // absent when cardinalities differ
};

/// Transport cost between configurations: the minimum over pairings of
/// sum_i half_sq_dist(x_i, y_sigma(i)), or infinity when the cardinalities
/// differ. Equal cardinalities are solved exactly by the assignment solver
/// in O(n^3). c(empty, empty) = 0.
ConfigCostResult config_cost(const Configuration& eta, const Configuration& omega);

/// Exact minimum by enumerating all n! pairings. Oracle for config_cost;
/// guarded at n <= 8.
ExtendedCost brute_force_cost(const Configuration& eta, const Configuration& omega);

/// Symmetric cost on ordered tuples: min over permutations sigma of
/// (1/2)||x - sigma(y)||^2. Agrees with config_cost of the induced
/// configurations and is invariant under permuting either tuple.
double symmetric_cost(std::span<const Point> x, std::span<const Point> y);

}  // namespace configot
