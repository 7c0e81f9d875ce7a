#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "configot/matching.hpp"
#include "configot/process_distance.hpp"
#include "configot/summation.hpp"

namespace configot {

namespace {

// Ground costs between two lists of equal-cardinality configurations.
std::vector<std::vector<double>> config_cost_matrix(std::span<const Configuration> a,
                                                    std::span<const Configuration> b) {
  std::vector<std::vector<double>> cost(a.size(), std::vector<double>(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      cost[i][j] = config_cost(a[i], b[j]).cost.value();
    }
  }
  return cost;
}

// Standard error of the plan value: per source item, its average matched
// cost; spread of those over sqrt(count).
double plan_standard_error(const std::vector<std::vector<double>>& cost,
                           const MatrixTransportResult& plan, std::size_t m1) {
  if (m1 < 2) return 0.0;
  std::vector<double> per_item(m1, 0.0);
  std::vector<double> item_mass(m1, 0.0);
  for (const PlanEntry& e : plan.entries) {
    per_item[e.source] += e.mass * cost[e.source][e.target];
    item_mass[e.source] += e.mass;
  }
  for (std::size_t i = 0; i < m1; ++i) {
    if (item_mass[i] > 0.0) per_item[i] /= item_mass[i];
  }
  const MeanAndError st = mean_and_standard_error(per_item);
  return st.standard_error;
}

}  // namespace

StratumEstimate empirical_stratum_cost(std::span<const Configuration> a,
                                       std::span<const Configuration> b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("empirical_stratum_cost: empty sample list");
  }
  const auto cost = config_cost_matrix(a, b);
  std::vector<double> supply(a.size(), 1.0 / static_cast<double>(a.size()));
  std::vector<double> demand(b.size(), 1.0 / static_cast<double>(b.size()));
  const MatrixTransportResult plan = solve_transport(cost, supply, demand);
  StratumEstimate est;
  est.w2 = plan.cost;
  est.standard_error = plan_standard_error(cost, plan, a.size());
  est.tuples = a.size();
  return est;
}

EmpiricalDistanceResult empirical_process_distance(std::span<const Configuration> samples_mu,
                                                   std::span<const Configuration> samples_nu,
                                                   const EmpiricalOptions& opts) {
  if (samples_mu.empty() || samples_nu.empty()) {
    throw std::invalid_argument("empirical_process_distance: empty sample list");
  }
  const double m1 = static_cast<double>(samples_mu.size());
  const double m2 = static_cast<double>(samples_nu.size());

  // Group samples by cardinality.
  std::map<std::size_t, std::vector<std::size_t>> by_count_mu, by_count_nu;
  std::size_t max_n = 0;
  for (std::size_t i = 0; i < samples_mu.size(); ++i) {
    const std::size_t n = samples_mu[i].size();
    by_count_mu[n].push_back(i);
    max_n = std::max(max_n, n);
  }
  for (std::size_t j = 0; j < samples_nu.size(); ++j) {
    const std::size_t n = samples_nu[j].size();
    by_count_nu[n].push_back(j);
    max_n = std::max(max_n, n);
  }

  std::vector<double> freq_mu(max_n + 1, 0.0), freq_nu(max_n + 1, 0.0);
  for (const auto& [n, items] : by_count_mu) freq_mu[n] = static_cast<double>(items.size()) / m1;
  for (const auto& [n, items] : by_count_nu) freq_nu[n] = static_cast<double>(items.size()) / m2;

  EmpiricalDistanceResult result;

  // Gate on the empirical count frequencies. Exact equality never holds at
  // finite sample size, so the default tolerance is a binomial confidence
  // width per bin.
  std::vector<double> eps(max_n + 1, 0.0);
  for (std::size_t n = 0; n <= max_n; ++n) {
    if (opts.eps >= 0.0) {
      eps[n] = opts.eps;
    } else {
      const double pooled = (freq_mu[n] * m1 + freq_nu[n] * m2) / (m1 + m2);
      eps[n] = 3.0 * std::sqrt(pooled * (1.0 - pooled) * (1.0 / m1 + 1.0 / m2));
    }
  }
  const CountDistribution emp_mu(freq_mu, 0.0);
  const CountDistribution emp_nu(freq_nu, 0.0);
  result.gate = finiteness_gate(emp_mu, emp_nu, eps, opts.eps >= 0.0 ? opts.eps : 0.0);
  if (!result.gate.pass) {
    result.infinite = true;
    return result;
  }

  // Averaged count pmf; strata seen on one side only are excluded from the
  // decomposition and their pooled weight moves to the tail (they passed the
  // gate, so the weight is within tolerance of zero).
  std::vector<double> avg_pmf(max_n + 1, 0.0);
  double dropped_tail = 0.0;
  std::vector<StratumCost> per_n;
  for (std::size_t n = 0; n <= max_n; ++n) {
    const double pooled = 0.5 * (freq_mu[n] + freq_nu[n]);
    if (pooled == 0.0) continue;
    const bool has_mu = by_count_mu.count(n) > 0;
    const bool has_nu = by_count_nu.count(n) > 0;
    if (has_mu && has_nu) {
      avg_pmf[n] = pooled;
      if (n == 0) continue;  // empty configurations pair at zero cost

      StratumSolution stratum;
      stratum.n = n;
      stratum.weight = pooled;
      stratum.mu_items = by_count_mu[n];
      stratum.nu_items = by_count_nu[n];
      std::vector<Configuration> a, b;
      a.reserve(stratum.mu_items.size());
      b.reserve(stratum.nu_items.size());
      for (std::size_t i : stratum.mu_items) a.push_back(samples_mu[i]);
      for (std::size_t j : stratum.nu_items) b.push_back(samples_nu[j]);
      stratum.cost_matrix = config_cost_matrix(a, b);
      std::vector<double> supply(a.size(), 1.0 / static_cast<double>(a.size()));
      std::vector<double> demand(b.size(), 1.0 / static_cast<double>(b.size()));
      MatrixTransportResult plan = solve_transport(stratum.cost_matrix, supply, demand);
      stratum.w2 = plan.cost;
      stratum.standard_error = plan_standard_error(stratum.cost_matrix, plan, a.size());
      stratum.coupling = std::move(plan.entries);

      per_n.push_back(StratumCost{n, stratum.w2});
      result.strata.push_back(std::move(stratum));
    } else {
      dropped_tail += pooled;
      result.dropped.emplace_back(n, pooled);
    }
  }

  const CountDistribution averaged(avg_pmf, dropped_tail);
  result.report = combine_by_count(per_n, averaged);

  std::vector<double> se_terms;
  se_terms.reserve(result.strata.size());
  for (const StratumSolution& s : result.strata) {
    se_terms.push_back(s.weight * s.standard_error * s.weight * s.standard_error);
  }
  result.standard_error = std::sqrt(pairwise_sum(se_terms));
  return result;
}

}  // namespace configot
