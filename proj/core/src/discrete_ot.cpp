#include "configot/discrete_ot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "configot/assignment.hpp"
#include "configot/geometry.hpp"
#include "configot/summation.hpp"

namespace configot {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool all_equal(std::span<const double> w) {
  for (double x : w) {
    if (x != w.front()) return false;
  }
  return true;
}

double entries_cost(const std::vector<PlanEntry>& entries,
                    const std::vector<std::vector<double>>& cost) {
  std::vector<double> terms(entries.size());
  for (std::size_t e = 0; e < entries.size(); ++e) {
    terms[e] = entries[e].mass * cost[entries[e].source][entries[e].target];
  }
  return pairwise_sum(terms);
}

double duals_value(std::span<const double> supply, std::span<const double> demand,
                   const std::vector<double>& f, const std::vector<double>& g) {
  std::vector<double> terms;
  terms.reserve(supply.size() + demand.size());
  for (std::size_t i = 0; i < supply.size(); ++i) terms.push_back(supply[i] * f[i]);
  for (std::size_t j = 0; j < demand.size(); ++j) terms.push_back(demand[j] * g[j]);
  return pairwise_sum(terms);
}

MatrixTransportResult transport_by_assignment(const std::vector<std::vector<double>>& cost,
                                              std::span<const double> supply) {
  const std::size_t n = supply.size();
  const AssignmentResult res =
      solve_assignment(n, [&](std::size_t i, std::size_t j) { return cost[i][j]; });
  MatrixTransportResult out;
  out.entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.entries.push_back(PlanEntry{i, res.col_of_row[i], supply[i]});
  }
  out.dual_source = res.row_potentials;
  out.dual_target = res.col_potentials;
  out.cost = entries_cost(out.entries, cost);
  out.dual_value = duals_value(supply, supply, out.dual_source, out.dual_target);
  return out;
}

// Successive shortest paths with node potentials, dense Dijkstra per
// augmentation. Nodes 0..n-1 are sources, n..n+m-1 sinks.
MatrixTransportResult transport_by_flow(const std::vector<std::vector<double>>& cost,
                                        std::span<const double> supply_in,
                                        std::span<const double> demand_in) {
  const std::size_t n = supply_in.size();
  const std::size_t m = demand_in.size();
  const std::size_t nodes = n + m;

  std::vector<double> supply(supply_in.begin(), supply_in.end());
  std::vector<double> demand(demand_in.begin(), demand_in.end());
  const double total_supply = pairwise_sum(supply);
  // Balance exactly; inputs already agree to 1e-9 relative.
  const double scale = total_supply / pairwise_sum(demand);
  for (double& d : demand) d *= scale;

  std::vector<std::vector<double>> flow(n, std::vector<double>(m, 0.0));
  std::vector<double> potential(nodes, 0.0);

  const double mass_tol = 1e-13 * (1.0 + total_supply);
  const std::size_t max_rounds = 50 * nodes + 1000;

  std::vector<double> dist(nodes);
  std::vector<std::size_t> parent(nodes);
  std::vector<char> settled(nodes);

  for (std::size_t round = 0;; ++round) {
    double remaining = 0.0;
    for (double s : supply) remaining = std::max(remaining, s);
    if (remaining <= mass_tol) break;
    if (round >= max_rounds) {
      throw std::runtime_error("solve_transport: augmentation limit reached");
    }

    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(parent.begin(), parent.end(), nodes);
    std::fill(settled.begin(), settled.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (supply[i] > mass_tol) dist[i] = 0.0;
    }

    std::size_t reached_sink = nodes;
    while (true) {
      std::size_t u = nodes;
      double best = kInf;
      for (std::size_t v = 0; v < nodes; ++v) {
        if (!settled[v] && dist[v] < best) {
          best = dist[v];
          u = v;
        }
      }
      if (u == nodes) break;
      settled[u] = 1;
      if (u >= n && demand[u - n] > mass_tol) {
        reached_sink = u;
        break;
      }
      if (u < n) {
        for (std::size_t j = 0; j < m; ++j) {
          const double rc = std::max(0.0, cost[u][j] + potential[u] - potential[n + j]);
          if (dist[u] + rc < dist[n + j]) {
            dist[n + j] = dist[u] + rc;
            parent[n + j] = u;
          }
        }
      } else {
        const std::size_t j = u - n;
        for (std::size_t i = 0; i < n; ++i) {
          if (flow[i][j] <= 0.0) continue;
          const double rc = std::max(0.0, potential[n + j] - potential[i] - cost[i][j]);
          if (dist[u] + rc < dist[i]) {
            dist[i] = dist[u] + rc;
            parent[i] = u;
          }
        }
      }
    }

    if (reached_sink == nodes) {
      throw std::runtime_error("solve_transport: no augmenting path (unbalanced instance)");
    }

    const double horizon = dist[reached_sink];
    for (std::size_t v = 0; v < nodes; ++v) {
      potential[v] += std::min(dist[v], horizon);
    }

    double delta = demand[reached_sink - n];
    std::size_t v = reached_sink;
    while (parent[v] != nodes) {
      const std::size_t u = parent[v];
      if (v < n) delta = std::min(delta, flow[v][u - n]);  // backward arc
      v = u;
    }
    delta = std::min(delta, supply[v]);

    v = reached_sink;
    while (parent[v] != nodes) {
      const std::size_t u = parent[v];
      if (v >= n) {
        flow[u][v - n] += delta;
      } else {
        flow[v][u - n] -= delta;
      }
      v = u;
    }
    supply[v] -= delta;
    demand[reached_sink - n] -= delta;
  }

  MatrixTransportResult out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (flow[i][j] > 0.0) out.entries.push_back(PlanEntry{i, j, flow[i][j]});
    }
  }
  out.dual_source.resize(n);
  out.dual_target.resize(m);
  for (std::size_t i = 0; i < n; ++i) out.dual_source[i] = -potential[i];
  for (std::size_t j = 0; j < m; ++j) out.dual_target[j] = potential[n + j];
  out.cost = entries_cost(out.entries, cost);
  out.dual_value = duals_value(supply_in, demand_in, out.dual_source, out.dual_target);
  return out;
}

}  // namespace

MatrixTransportResult solve_transport(const std::vector<std::vector<double>>& cost,
                                      std::span<const double> supply,
                                      std::span<const double> demand) {
  const std::size_t n = supply.size();
  const std::size_t m = demand.size();
  if (n == 0 || m == 0) {
    throw std::invalid_argument("solve_transport: empty marginal");
  }
  if (cost.size() != n) {
    throw std::invalid_argument("solve_transport: cost rows must match supply size");
  }
  for (const auto& row : cost) {
    if (row.size() != m) {
      throw std::invalid_argument("solve_transport: cost columns must match demand size");
    }
    for (double c : row) {
      if (!std::isfinite(c) || c < 0.0) {
        throw std::invalid_argument("solve_transport: costs must be finite and >= 0");
      }
    }
  }
  const double total_supply = pairwise_sum(supply);
  const double total_demand = pairwise_sum(demand);
  if (std::abs(total_supply - total_demand) >
      1e-9 * std::max({1.0, total_supply, total_demand})) {
    throw std::invalid_argument("solve_transport: supply and demand totals differ");
  }

  if (n == m && all_equal(supply) && all_equal(demand) && supply[0] == demand[0]) {
    return transport_by_assignment(cost, supply);
  }
  return transport_by_flow(cost, supply, demand);
}

TransportPlan solve_discrete_ot(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  if (mu.empty() || nu.empty()) {
    throw std::invalid_argument("solve_discrete_ot: empty support");
  }
  if (mu.dim() != nu.dim()) {
    throw std::invalid_argument("solve_discrete_ot: dimension mismatch");
  }
  const double mass_scale = std::max({1.0, mu.total_mass(), nu.total_mass()});
  if (std::abs(mu.total_mass() - nu.total_mass()) > 1e-9 * mass_scale) {
    throw std::invalid_argument("solve_discrete_ot: total masses differ");
  }

  std::vector<std::vector<double>> cost(mu.size(), std::vector<double>(nu.size()));
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (std::size_t j = 0; j < nu.size(); ++j) cost[i][j] = half_sq_dist(mu.atom(i), nu.atom(j));

  MatrixTransportResult res = solve_transport(cost, mu.weights(), nu.weights());

  TransportPlan plan;
  plan.source = mu;
  plan.target = nu;
  plan.entries = std::move(res.entries);
  plan.dual_source = std::move(res.dual_source);
  plan.dual_target = std::move(res.dual_target);
  plan.cost = res.cost;
  plan.dual_value = res.dual_value;
  return plan;
}

}  // namespace configot
