#include "configot/summation.hpp"

#include <cmath>
#include <vector>

namespace configot {

double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 16) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

MeanAndError mean_and_standard_error(std::span<const double> xs) {
  MeanAndError out;
  out.count = xs.size();
  if (xs.empty()) return out;
  out.mean = pairwise_sum(xs) / static_cast<double>(xs.size());
  if (xs.size() < 2) return out;
  std::vector<double> sq(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double d = xs[i] - out.mean;
    sq[i] = d * d;
  }
  const double var = pairwise_sum(sq) / static_cast<double>(xs.size() - 1);
  out.standard_error = std::sqrt(var / static_cast<double>(xs.size()));
  return out;
}

}  // namespace configot
