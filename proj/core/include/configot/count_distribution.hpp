#pragma once

#include <cstddef>
#include <vector>

namespace configot {

/// Truncated law of the atom count eta(X): probabilities p_0..p_nmax plus an
/// explicit tail mass for counts above nmax. pmf + tail must sum to 1 within
/// 1e-9. Identities summing over all n account for the tail through the
/// truncation bounds they report.
class CountDistribution {
 public:
  CountDistribution() : pmf_(1, 1.0), tail_mass_(0.0) {}
  CountDistribution(std::vector<double> pmf, double tail_mass);

  std::size_t nmax() const noexcept { return pmf_.size() - 1; }
  /// p_n, zero above nmax (the truncated part lives in tail_mass()).
  double p(std::size_t n) const noexcept { return n < pmf_.size() ? pmf_[n] : 0.0; }
  const std::vector<double>& pmf() const noexcept { return pmf_; }
  double tail_mass() const noexcept { return tail_mass_; }

  /// Poisson(lambda) truncated at nmax; the tail is the series remainder,
  /// computed directly rather than as 1 - sum.
  static CountDistribution poisson(double lambda, std::size_t nmax);

  /// Deterministic count n (binomial process): p_n = 1.
  static CountDistribution fixed(std::size_t n, std::size_t nmax);

  /// Finite mixture sum_i probs[i] * parts[i], all parts at a common nmax.
  static CountDistribution mixture(const std::vector<double>& probs,
                                   const std::vector<CountDistribution>& parts);

  /// Empirical frequencies of observed counts, truncated at nmax (counts
  /// above nmax land in the tail).
  static CountDistribution from_counts(const std::vector<std::size_t>& counts, std::size_t nmax);

 private:
  std::vector<double> pmf_;
  double tail_mass_;
};

}  // namespace configot
