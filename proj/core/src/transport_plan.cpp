#include "configot/transport_plan.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "configot/geometry.hpp"
#include "configot/summation.hpp"

namespace configot {

PlanCertificate certify(const TransportPlan& plan) {
  PlanCertificate cert;

  std::vector<double> row_sums(plan.source.size(), 0.0);
  std::vector<double> col_sums(plan.target.size(), 0.0);
  std::vector<double> costs(plan.entries.size(), 0.0);
  for (std::size_t e = 0; e < plan.entries.size(); ++e) {
    const PlanEntry& entry = plan.entries[e];
    row_sums[entry.source] += entry.mass;
    col_sums[entry.target] += entry.mass;
    costs[e] =
        entry.mass * half_sq_dist(plan.source.atom(entry.source), plan.target.atom(entry.target));
  }
  for (std::size_t i = 0; i < row_sums.size(); ++i) {
    cert.max_source_marginal_error =
        std::max(cert.max_source_marginal_error, std::abs(row_sums[i] - plan.source.weight(i)));
  }
  for (std::size_t j = 0; j < col_sums.size(); ++j) {
    cert.max_target_marginal_error =
        std::max(cert.max_target_marginal_error, std::abs(col_sums[j] - plan.target.weight(j)));
  }
  cert.recomputed_cost = pairwise_sum(costs);
  cert.cost_error = std::abs(cert.recomputed_cost - plan.cost);

  for (std::size_t i = 0; i < plan.source.size(); ++i) {
    for (std::size_t j = 0; j < plan.target.size(); ++j) {
      const double slack = plan.dual_source[i] + plan.dual_target[j] -
                           half_sq_dist(plan.source.atom(i), plan.target.atom(j));
      cert.max_dual_infeasibility = std::max(cert.max_dual_infeasibility, slack);
    }
  }
  cert.duality_gap = cert.recomputed_cost - plan.dual_value;
  return cert;
}

}  // namespace configot
