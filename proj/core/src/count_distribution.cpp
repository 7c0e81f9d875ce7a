#include "configot/count_distribution.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "configot/summation.hpp"

namespace configot {

CountDistribution::CountDistribution(std::vector<double> pmf, double tail_mass)
    : pmf_(std::move(pmf)), tail_mass_(tail_mass) {
  if (pmf_.empty()) {
    throw std::invalid_argument("CountDistribution: pmf must contain at least p_0");
  }
  for (double p : pmf_) {
    if (!std::isfinite(p) || p < 0.0) {
      throw std::invalid_argument("CountDistribution: probabilities must be finite and >= 0");
    }
  }
  if (!std::isfinite(tail_mass_) || tail_mass_ < 0.0) {
    throw std::invalid_argument("CountDistribution: tail mass must be finite and >= 0");
  }
  const double total = pairwise_sum(pmf_) + tail_mass_;
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("CountDistribution: pmf + tail must sum to 1");
  }
}

CountDistribution CountDistribution::poisson(double lambda, std::size_t nmax) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("CountDistribution::poisson: lambda must be positive");
  }
  std::vector<double> pmf(nmax + 1);
  pmf[0] = std::exp(-lambda);
  for (std::size_t n = 1; n <= nmax; ++n) {
    pmf[n] = pmf[n - 1] * lambda / static_cast<double>(n);
  }
  // Remainder of the series, summed forward until terms vanish.
  double term = pmf[nmax] * lambda / static_cast<double>(nmax + 1);
  double tail = 0.0;
  std::size_t n = nmax + 1;
  while (term > 0.0 && tail + term != tail) {
    tail += term;
    ++n;
    term *= lambda / static_cast<double>(n);
  }
  return CountDistribution(std::move(pmf), tail);
}

CountDistribution CountDistribution::fixed(std::size_t n, std::size_t nmax) {
  std::vector<double> pmf(nmax + 1, 0.0);
  double tail = 0.0;
  if (n <= nmax) {
    pmf[n] = 1.0;
  } else {
    tail = 1.0;
  }
  return CountDistribution(std::move(pmf), tail);
}

CountDistribution CountDistribution::mixture(const std::vector<double>& probs,
                                             const std::vector<CountDistribution>& parts) {
  if (probs.size() != parts.size() || parts.empty()) {
    throw std::invalid_argument("CountDistribution::mixture: probs and parts must match");
  }
  std::size_t nmax = 0;
  for (const auto& part : parts) nmax = std::max(nmax, part.nmax());
  std::vector<double> pmf(nmax + 1, 0.0);
  double tail = 0.0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (probs[i] < 0.0) {
      throw std::invalid_argument("CountDistribution::mixture: negative mixing weight");
    }
    for (std::size_t n = 0; n <= parts[i].nmax(); ++n) {
      pmf[n] += probs[i] * parts[i].p(n);
    }
    tail += probs[i] * parts[i].tail_mass();
  }
  return CountDistribution(std::move(pmf), tail);
}

CountDistribution CountDistribution::from_counts(const std::vector<std::size_t>& counts,
                                                 std::size_t nmax) {
  if (counts.empty()) {
    throw std::invalid_argument("CountDistribution::from_counts: no observations");
  }
  std::vector<double> pmf(nmax + 1, 0.0);
  double tail = 0.0;
  const double w = 1.0 / static_cast<double>(counts.size());
  for (std::size_t c : counts) {
    if (c <= nmax) {
      pmf[c] += w;
    } else {
      tail += w;
    }
  }
  return CountDistribution(std::move(pmf), tail);
}

}  // namespace configot
