#pragma once

#include <span>
#include <vector>

#include "configot/discrete_measure.hpp"
#include "configot/transport_plan.hpp"

namespace configot {

/// Solution of a matrix-form balanced transportation problem, with the dual
/// pair certifying optimality (F_i + G_j <= c_ij, tight on the support).
struct MatrixTransportResult {
  std::vector<PlanEntry> entries;
  std::vector<double> dual_source;
  std::vector<double> dual_target;
  double cost = 0.0;
  double dual_value = 0.0;
};

/// Exact transportation solve for an arbitrary nonnegative cost matrix.
/// Equal-size uniform marginals reduce to the assignment solver (the plan is
/// a permutation); general weights go through successive shortest paths with
/// node potentials. Supply and demand must balance to 1e-9 relative.
MatrixTransportResult solve_transport(const std::vector<std::vector<double>>& cost,
                                      std::span<const double> supply,
                                      std::span<const double> demand);

/// Exact optimal transport between two discrete measures of equal total mass
/// for the ground cost half_sq_dist, dual certificate included.
TransportPlan solve_discrete_ot(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

}  // namespace configot
