#pragma once

#include <cstddef>
#include <span>

namespace configot {

/// Pairwise (cascade) summation. Used wherever sums feed tight identity
/// checks so that the reduction order cannot move results by more than
/// ~1e-12 relative.
double pairwise_sum(std::span<const double> xs);

struct MeanAndError {
  double mean = 0.0;
  double standard_error = 0.0;  // sample std / sqrt(n); 0 when n < 2
  std::size_t count = 0;
};

/// Sample mean and its Monte-Carlo standard error, both via pairwise sums.
MeanAndError mean_and_standard_error(std::span<const double> xs);

}  // namespace configot
