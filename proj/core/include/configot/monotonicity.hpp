#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "configot/configuration.hpp"

namespace configot {

/// Outcome of a c-cyclical-monotonicity check. On failure, `witness_indices`
/// names the pairs involved and `witness_permutation` a reassignment of
/// their targets that lowers the total cost by `violation`.
struct MonotonicityReport {
  bool monotone = true;
  std::vector<std::size_t> witness_indices;      // subset of pair indices
  std::vector<std::size_t> witness_permutation;  // sigma on that subset
  double violation = 0.0;                        // cost decrease achieved by sigma
};

/// Checks sum_i c(eta_i, omega_i) <= sum_i c(eta_i, omega_sigma(i)) over the
/// whole list of pairs: exhaustively when m! <= permutation_budget, otherwise
/// over all transpositions plus `permutation_budget` seeded random
/// permutations. Pairs whose own cost is infinite are an error; cross costs
/// may be infinite (such sigma never violate).
MonotonicityReport check_cyclical_monotonicity(
    const std::vector<std::pair<Configuration, Configuration>>& pairs,
    std::uint64_t permutation_budget, std::uint64_t sample_seed = 0);

/// Exhaustive check over every subset of the pairs up to max_subset_size and
/// every permutation of each subset. A violating permutation decomposes into
/// reassignment cycles, so this reduces to negative-cycle detection (min-plus
/// matrix powers) on the gain graph w[a][b] = c(eta_a, omega_b) - c(eta_a,
/// omega_a); exact and polynomial where direct enumeration is not.
MonotonicityReport check_subsets_cyclical_monotonicity(
    const std::vector<std::pair<Configuration, Configuration>>& pairs,
    std::size_t max_subset_size, double tolerance = -1.0);

/// Matrix-level core of the subset check, for plan supports whose pairing
/// costs are already known: pair_cost[a][b] is the cost of matching the
/// source of support entry a with the target of entry b (infinity allowed
/// off-diagonal). tolerance < 0 picks 1e-9 * (1 + mean diagonal).
MonotonicityReport check_subsets_cyclical_monotonicity(
    const std::vector<std::vector<double>>& pair_cost, std::size_t max_subset_size,
    double tolerance = -1.0);

}  // namespace configot
