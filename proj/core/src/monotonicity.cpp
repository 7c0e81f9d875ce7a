#include "configot/monotonicity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "configot/matching.hpp"
#include "configot/rng.hpp"
#include "configot/summation.hpp"

namespace configot {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::vector<double>> cross_cost_matrix(
    const std::vector<std::pair<Configuration, Configuration>>& pairs) {
  const std::size_t m = pairs.size();
  std::vector<std::vector<double>> c(m, std::vector<double>(m, kInf));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const ExtendedCost cij = config_cost(pairs[i].first, pairs[j].second).cost;
      c[i][j] = cij.value_or(kInf);
    }
    if (!std::isfinite(c[i][i])) {
      throw std::invalid_argument(
          "check_cyclical_monotonicity: pair with infinite cost (pre-filter required)");
    }
  }
  return c;
}

double permuted_sum(const std::vector<std::vector<double>>& c,
                    const std::vector<std::size_t>& sigma) {
  std::vector<double> terms(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (!std::isfinite(c[i][sigma[i]])) return kInf;
    terms[i] = c[i][sigma[i]];
  }
  return pairwise_sum(terms);
}

double default_tolerance(const std::vector<std::vector<double>>& c) {
  std::vector<double> diag(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) diag[i] = c[i][i];
  const double mean = c.empty() ? 0.0 : pairwise_sum(diag) / static_cast<double>(c.size());
  return 1e-9 * (1.0 + std::abs(mean));
}

// Factorial with saturation, for the budget comparison.
std::uint64_t saturating_factorial(std::size_t m) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= m; ++i) {
    if (f > std::numeric_limits<std::uint64_t>::max() / i) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    f *= i;
  }
  return f;
}

}  // namespace

MonotonicityReport check_cyclical_monotonicity(
    const std::vector<std::pair<Configuration, Configuration>>& pairs,
    std::uint64_t permutation_budget, std::uint64_t sample_seed) {
  const std::size_t m = pairs.size();
  MonotonicityReport report;
  if (m <= 1) return report;

  const auto c = cross_cost_matrix(pairs);
  const double tol = default_tolerance(c);

  std::vector<std::size_t> identity(m);
  std::iota(identity.begin(), identity.end(), 0);
  const double base = permuted_sum(c, identity);

  auto consider = [&](const std::vector<std::size_t>& sigma) {
    const double s = permuted_sum(c, sigma);
    if (s < base - tol && base - s > report.violation) {
      report.monotone = false;
      report.witness_indices = identity;
      report.witness_permutation = sigma;
      report.violation = base - s;
    }
  };

  if (saturating_factorial(m) <= permutation_budget) {
    std::vector<std::size_t> sigma = identity;
    while (std::next_permutation(sigma.begin(), sigma.end())) consider(sigma);
  } else {
    // All transpositions, then seeded random permutations up to the budget.
    std::vector<std::size_t> sigma = identity;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        std::swap(sigma[i], sigma[j]);
        consider(sigma);
        std::swap(sigma[i], sigma[j]);
      }
    }
    RngStream rng(sample_seed, 0);
    for (std::uint64_t k = 0; k < permutation_budget; ++k) {
      sigma = identity;
      for (std::size_t i = m; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
        std::swap(sigma[i - 1], sigma[j]);
      }
      consider(sigma);
    }
  }
  return report;
}

MonotonicityReport check_subsets_cyclical_monotonicity(
    const std::vector<std::pair<Configuration, Configuration>>& pairs,
    std::size_t max_subset_size, double tolerance) {
  return check_subsets_cyclical_monotonicity(cross_cost_matrix(pairs), max_subset_size,
                                             tolerance);
}

MonotonicityReport check_subsets_cyclical_monotonicity(
    const std::vector<std::vector<double>>& pair_cost, std::size_t max_subset_size,
    double tolerance) {
  const std::size_t m = pair_cost.size();
  MonotonicityReport report;
  if (m <= 1 || max_subset_size < 2) return report;

  const double tol = tolerance >= 0.0 ? tolerance : default_tolerance(pair_cost);

  // Gain of rerouting entry a's source to entry b's target. Self-loops are
  // excluded so that a negative closed walk of length L <= max_subset_size
  // always contains a negative simple cycle of length <= L.
  std::vector<std::vector<double>> w(m, std::vector<double>(m, kInf));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      if (std::isfinite(pair_cost[a][b])) w[a][b] = pair_cost[a][b] - pair_cost[a][a];
    }
  }

  // Min-plus powers of w with predecessor tracking for witness recovery.
  std::vector<std::vector<double>> power = w;
  std::vector<std::vector<std::vector<std::size_t>>> choices;  // choices[L-2][i][j]
  for (std::size_t len = 2; len <= std::min(max_subset_size, m); ++len) {
    std::vector<std::vector<double>> next(m, std::vector<double>(m, kInf));
    std::vector<std::vector<std::size_t>> choice(m, std::vector<std::size_t>(m, m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t k = 0; k < m; ++k) {
        if (!std::isfinite(power[i][k])) continue;
        for (std::size_t j = 0; j < m; ++j) {
          if (!std::isfinite(w[k][j])) continue;
          const double v = power[i][k] + w[k][j];
          if (v < next[i][j]) {
            next[i][j] = v;
            choice[i][j] = k;
          }
        }
      }
    }
    choices.push_back(std::move(choice));
    power = std::move(next);

    // A negative diagonal entry at length `len` is a closed walk improving
    // the pairing; recover it and reduce to a simple cycle.
    for (std::size_t i = 0; i < m; ++i) {
      if (power[i][i] < -tol) {
        std::vector<std::size_t> walk{i};
        std::size_t end = i;
        for (std::size_t l = len; l >= 2; --l) {
          const std::size_t k = choices[l - 2][i][end];
          walk.push_back(k == m ? i : k);
          end = walk.back();
          if (l == 2) break;
        }
        // walk holds [i, k_{len-1}, ..., k_1]; reverse into visit order and
        // close the cycle implicitly.
        std::reverse(walk.begin(), walk.end());
        // Reduce to a simple cycle: drop everything between repeats, keeping
        // whichever loop is negative.
        std::vector<std::size_t> cycle;
        for (std::size_t v : walk) {
          auto it = std::find(cycle.begin(), cycle.end(), v);
          if (it != cycle.end()) {
            std::vector<std::size_t> loop(it, cycle.end());
            double gain = 0.0;
            for (std::size_t t = 0; t < loop.size(); ++t) {
              gain += w[loop[t]][loop[(t + 1) % loop.size()]];
            }
            if (gain < -tol) {
              cycle = std::move(loop);
              break;
            }
            cycle.erase(it + 1, cycle.end());
          } else {
            cycle.push_back(v);
          }
        }
        if (cycle.size() < 2) continue;
        double gain = 0.0;
        for (std::size_t t = 0; t < cycle.size(); ++t) {
          gain += w[cycle[t]][cycle[(t + 1) % cycle.size()]];
        }
        if (gain >= -tol) continue;

        report.monotone = false;
        report.witness_indices = cycle;
        report.witness_permutation.resize(cycle.size());
        for (std::size_t t = 0; t < cycle.size(); ++t) {
          // Entry cycle[t] takes the target of the next entry in the cycle.
          report.witness_permutation[t] = (t + 1) % cycle.size();
        }
        report.violation = -gain;
        return report;
      }
    }
  }
  return report;
}

}  // namespace configot
