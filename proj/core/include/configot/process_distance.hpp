#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "configot/configuration.hpp"
#include "configot/count_distribution.hpp"
#include "configot/discrete_ot.hpp"
#include "configot/extended_cost.hpp"
#include "configot/models.hpp"
#include "configot/transport_plan.hpp"

namespace configot {

/// Count-law comparison. Finiteness of the process distance forces the two
/// count laws to coincide, so a failed gate means the distance is infinite.
struct GateReport {
  bool pass = true;
  std::size_t worst_bin = 0;
  double worst_diff = 0.0;  // max_n |p_n - q_n|
  double tail_diff = 0.0;
};

GateReport finiteness_gate(const CountDistribution& p, const CountDistribution& q, double eps);

/// Per-bin tolerances (empirical gates use binomial confidence widths).
GateReport finiteness_gate(const CountDistribution& p, const CountDistribution& q,
                           std::span<const double> per_bin_eps, double tail_eps);

struct StratumCost {
  std::size_t n = 0;
  double w2 = 0.0;
};

struct WeightedStratumCost {
  std::size_t n = 0;
  double w2 = 0.0;
  double weight = 0.0;
};

/// Count-conditional decomposition W^2 = sum_n W_n^2 p_n with the truncated
/// tail reported, not hidden.
struct DecompositionReport {
  std::vector<WeightedStratumCost> per_n;
  ExtendedCost combined;
  double truncation_error_bound = 0.0;
};

/// Combines per-stratum squared costs with the count law. Every n >= 1 whose
/// weight exceeds negligible_weight must be listed (n = 0 never contributes
/// cost). The truncation bound is tail_mass times the largest listed W_n^2.
DecompositionReport combine_by_count(std::span<const StratumCost> per_n,
                                     const CountDistribution& counts,
                                     double negligible_weight = 1e-9);

/// Squared process distance between Poisson processes with unit-mass diffuse
/// intensities: W^2(mu_s1, mu_s2) = T_e(s1, s2)^2, computed by quantile
/// coupling in 1-D and by the exact discrete solver otherwise.
double poisson_distance(const Intensity& sigma1, const Intensity& sigma2,
                        std::size_t grid_m = 1024);

struct McEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::size_t samples = 0;
};

/// Monte-Carlo cost of the explicit coupling (eta, t^Gamma eta) with
/// eta ~ Poisson(sigma1) and t the monotone map pushing sigma1 to sigma2.
/// For unit masses this estimates W^2 itself; for general equal masses it is
/// an upper-bound estimate only (the identity is stated for probability
/// intensities). Deterministic for fixed seed: sample i uses stream
/// (seed, i).
McEstimate poisson_coupling_estimate(const Density1D& sigma1, const Density1D& sigma2,
                                     std::size_t mc_samples, std::uint64_t seed,
                                     std::size_t grid_m = 1024);

/// Cox distance: the process distance equals E[T_e(sigma1, sigma2)] over the
/// random intensity pair, estimated by Monte Carlo over mixture draws. Both
/// E[T_e] and E[T_e^2] are reported; the identity uses E[T_e].
struct CoxDistanceEstimate {
  McEstimate distance;  // E[T_e]
  McEstimate squared;   // E[T_e^2]
  bool infinite = false;

  double w2() const { return distance.mean * distance.mean; }
};

CoxDistanceEstimate cox_distance(const CoxModel& model, std::size_t mc_samples,
                                 std::uint64_t seed, std::size_t grid_m = 1024);

/// Barbour-normalized cost c_b = c / eta(X): closed form
/// (1 - e^{-1}) T_e^2 for unit-mass Poisson processes, cross-checked against
/// the count decomposition with per-stratum costs (1/n) * n * T_e^2.
struct BarbourResult {
  double te2 = 0.0;
  double closed_form = 0.0;
  double decomposition = 0.0;
  DecompositionReport report;
};

BarbourResult barbour_distance(const Intensity& sigma1, const Intensity& sigma2,
                               std::size_t nmax = 20, std::size_t grid_m = 1024);

/// 1-D affine displacement h(x) = offset + slope * x.
struct AffineMap1D {
  double offset = 0.0;
  double slope = 0.0;
  double operator()(double x) const { return offset + slope * x; }
};

/// Verifies W^2(mu_sigma, law of (Id+h)^Gamma eta) <= (1/2) int ||h||^2 dsigma:
/// the bound by quadrature, the left side by Monte Carlo over the explicit
/// coupling (eta, (Id+h)^Gamma eta).
struct ShiftBoundResult {
  double bound = 0.0;
  McEstimate estimate;
  bool pass = false;  // estimate.mean <= bound + 3 se (small absolute slack)
};

ShiftBoundResult shift_bound_check(const PoissonModel& model, const AffineMap1D& h,
                                   std::size_t mc_samples, std::uint64_t seed);

/// OT between uniform empirical measures on two equal-cardinality
/// configuration samples; standard error from the per-item matched costs.
struct StratumEstimate {
  double w2 = 0.0;
  double standard_error = 0.0;
  std::size_t tuples = 0;
};

StratumEstimate empirical_stratum_cost(std::span<const Configuration> a,
                                       std::span<const Configuration> b);

/// One resolved cardinality stratum of the empirical process distance.
struct StratumSolution {
  std::size_t n = 0;
  double weight = 0.0;  // averaged empirical frequency
  double w2 = 0.0;
  double standard_error = 0.0;
  std::vector<std::size_t> mu_items;             // indices into samples_mu
  std::vector<std::size_t> nu_items;             // indices into samples_nu
  std::vector<PlanEntry> coupling;               // local indices
  std::vector<std::vector<double>> cost_matrix;  // config_cost ground costs
};

struct EmpiricalOptions {
  /// Per-bin gate tolerance; negative means the binomial default
  /// 3 sqrt(pbar (1-pbar) (1/m1 + 1/m2)) per count bin.
  double eps = -1.0;
};

struct EmpiricalDistanceResult {
  GateReport gate;
  bool infinite = false;
  DecompositionReport report;
  double standard_error = 0.0;  // sqrt(sum (weight_n se_n)^2)
  std::vector<StratumSolution> strata;
  /// One-sided strata within gate tolerance: excluded from the sum, their
  /// pooled weight moved into the count law's tail (hence into the
  /// truncation bound).
  std::vector<std::pair<std::size_t, double>> dropped;
};

/// Plug-in process distance from samples: gate on empirical count
/// frequencies, per-stratum exact OT between the uniform empirical laws with
/// config_cost as ground cost, combined with the averaged count pmf. An
/// upper-biased estimator of W^2 at finite sample sizes.
EmpiricalDistanceResult empirical_process_distance(std::span<const Configuration> samples_mu,
                                                   std::span<const Configuration> samples_nu,
                                                   const EmpiricalOptions& opts = {});

/// Model-level entry used by the CLI: gate on exact count laws, then the
/// closed-form route the model pair admits.
using ProcessModel = std::variant<PoissonModel, BinomialModel, CoxModel>;

struct ProcessDistanceOptions {
  std::size_t nmax = 20;
  double gate_eps = 1e-9;
  std::size_t grid_m = 1024;
  std::size_t mc_samples = 0;  // required for Cox and for non-unit Poisson masses
  std::uint64_t seed = 0;
};

struct ProcessDistanceResult {
  GateReport gate;
  ExtendedCost w2;
  std::string route;
  std::optional<McEstimate> estimate;
};

ProcessDistanceResult process_distance(const ProcessModel& a, const ProcessModel& b,
                                       const ProcessDistanceOptions& opts = {});

}  // namespace configot
