#pragma once

#include <cstddef>
#include <vector>

#include "configot/discrete_measure.hpp"

namespace configot {

struct PlanEntry {
  std::size_t source = 0;
  std::size_t target = 0;
  double mass = 0.0;
};

/// A coupling between two discrete measures, with the dual pair (F, G) the
/// solver produced as an optimality certificate: F_i + G_j <= c_ij with
/// complementary slackness on the support.
struct TransportPlan {
  DiscreteMeasure source;
  DiscreteMeasure target;
  std::vector<PlanEntry> entries;
  double cost = 0.0;
  std::vector<double> dual_source;  // F at source atoms
  std::vector<double> dual_target;  // G at target atoms
  double dual_value = 0.0;          // sum a_i F_i + sum b_j G_j
};

/// Everything recomputed from scratch: marginal residuals, plan cost, dual
/// feasibility over all pairs, and the primal-dual gap.
struct PlanCertificate {
  double max_source_marginal_error = 0.0;
  double max_target_marginal_error = 0.0;
  double recomputed_cost = 0.0;
  double cost_error = 0.0;             // |stored - recomputed|
  double max_dual_infeasibility = 0.0; // max(F_i + G_j - c_ij, 0) over all pairs
  double duality_gap = 0.0;            // recomputed primal - dual value

  bool feasible(double marginal_tol = 1e-9) const {
    return max_source_marginal_error <= marginal_tol &&
           max_target_marginal_error <= marginal_tol;
  }
  bool optimal(double gap_tol_rel = 1e-7) const {
    const double scale = gap_tol_rel * (1.0 + recomputed_cost);
    return duality_gap <= scale && max_dual_infeasibility <= scale;
  }
};

PlanCertificate certify(const TransportPlan& plan);

}  // namespace configot
