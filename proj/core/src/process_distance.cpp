#include "configot/process_distance.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "configot/count_laws.hpp"
#include "configot/matching.hpp"
#include "configot/rng.hpp"
#include "configot/sampling.hpp"
#include "configot/summation.hpp"
#include "configot/transport_1d.hpp"

namespace configot {

namespace {

GateReport gate_impl(const CountDistribution& p, const CountDistribution& q,
                     const std::function<double(std::size_t)>& eps_at, double tail_eps) {
  GateReport report;
  const std::size_t n = std::max(p.pmf().size(), q.pmf().size());
  for (std::size_t i = 0; i < n; ++i) {
    const double diff = std::abs(p.p(i) - q.p(i));
    if (diff > report.worst_diff) {
      report.worst_diff = diff;
      report.worst_bin = i;
    }
    if (diff > eps_at(i)) report.pass = false;
  }
  report.tail_diff = std::abs(p.tail_mass() - q.tail_mass());
  if (report.tail_diff > tail_eps) report.pass = false;
  return report;
}

void check_unit_mass(const Intensity& sigma, const char* who) {
  if (std::abs(intensity_mass(sigma) - 1.0) > 1e-9) {
    throw std::invalid_argument(std::string(who) +
                                ": intensities must have total mass 1 (probability measures)");
  }
}

std::vector<double> intensity_quantiles(const Intensity& sigma, std::size_t m) {
  if (const auto* d = std::get_if<Density1D>(&sigma)) return d->quantile_grid(m);
  return quantile_grid(std::get<DiscreteMeasure>(sigma), m);
}

DiscreteMeasure intensity_as_measure(const Intensity& sigma) {
  return std::get<DiscreteMeasure>(sigma);
}

}  // namespace

GateReport finiteness_gate(const CountDistribution& p, const CountDistribution& q, double eps) {
  return gate_impl(p, q, [eps](std::size_t) { return eps; }, eps);
}

GateReport finiteness_gate(const CountDistribution& p, const CountDistribution& q,
                           std::span<const double> per_bin_eps, double tail_eps) {
  return gate_impl(
      p, q,
      [per_bin_eps](std::size_t i) {
        return i < per_bin_eps.size() ? per_bin_eps[i] : 0.0;
      },
      tail_eps);
}

DecompositionReport combine_by_count(std::span<const StratumCost> per_n,
                                     const CountDistribution& counts,
                                     double negligible_weight) {
  DecompositionReport report;
  std::vector<char> listed(counts.pmf().size(), 0);
  std::vector<double> terms;
  terms.reserve(per_n.size());
  double sup_w2 = 0.0;
  for (const StratumCost& s : per_n) {
    if (!std::isfinite(s.w2) || s.w2 < 0.0) {
      throw std::invalid_argument("combine_by_count: stratum costs must be finite and >= 0");
    }
    const double weight = counts.p(s.n);
    report.per_n.push_back(WeightedStratumCost{s.n, s.w2, weight});
    if (s.n >= 1) terms.push_back(weight * s.w2);
    if (s.n < listed.size()) listed[s.n] = 1;
    sup_w2 = std::max(sup_w2, s.w2);
  }
  // Every stratum carrying non-negligible weight must be covered; n = 0
  // pairs empty configurations at zero cost and is never required.
  for (std::size_t n = 1; n < counts.pmf().size(); ++n) {
    if (!listed[n] && counts.p(n) > negligible_weight) {
      throw std::invalid_argument("combine_by_count: missing stratum with non-negligible weight");
    }
  }
  report.combined = ExtendedCost(pairwise_sum(terms));
  report.truncation_error_bound = counts.tail_mass() * sup_w2;
  return report;
}

double poisson_distance(const Intensity& sigma1, const Intensity& sigma2, std::size_t grid_m) {
  check_unit_mass(sigma1, "poisson_distance");
  check_unit_mass(sigma2, "poisson_distance");
  const std::size_t k1 = intensity_dim(sigma1);
  const std::size_t k2 = intensity_dim(sigma2);
  if (k1 != k2) {
    throw std::invalid_argument("poisson_distance: intensity dimensions differ");
  }
  if (k1 == 1) {
    const auto q1 = intensity_quantiles(sigma1, grid_m);
    const auto q2 = intensity_quantiles(sigma2, grid_m);
    return solve_1d_quadratic(q1, q2).cost;
  }
  return solve_discrete_ot(intensity_as_measure(sigma1), intensity_as_measure(sigma2)).cost;
}

McEstimate poisson_coupling_estimate(const Density1D& sigma1, const Density1D& sigma2,
                                     std::size_t mc_samples, std::uint64_t seed,
                                     std::size_t grid_m) {
  if (mc_samples == 0) {
    throw std::invalid_argument("poisson_coupling_estimate: need at least one sample");
  }
  const double mass1 = sigma1.total_mass();
  const double mass2 = sigma2.total_mass();
  if (std::abs(mass1 - mass2) > 1e-9 * std::max(1.0, mass1)) {
    throw std::invalid_argument("poisson_coupling_estimate: intensity masses differ");
  }
  // Map pushing sigma1 to sigma2 (from the normalized quantile grids).
  const auto q1 = sigma1.normalized().quantile_grid(grid_m);
  const auto q2 = sigma2.normalized().quantile_grid(grid_m);
  const MonotoneMap1D map = solve_1d_quadratic(q1, q2).map;

  const PoissonModel model{Intensity(sigma1)};
  std::vector<double> costs(mc_samples);
  for (std::size_t s = 0; s < mc_samples; ++s) {
    RngStream rng(seed, s);
    const Configuration eta = sample_poisson(model, rng);
    const Configuration omega = lift_map(map, eta);
    costs[s] = config_cost(eta, omega).cost.value();
  }
  const MeanAndError st = mean_and_standard_error(costs);
  return McEstimate{st.mean, st.standard_error, mc_samples};
}

CoxDistanceEstimate cox_distance(const CoxModel& model, std::size_t mc_samples,
                                 std::uint64_t seed, std::size_t grid_m) {
  if (mc_samples == 0) {
    throw std::invalid_argument("cox_distance: need at least one sample");
  }
  CoxDistanceEstimate out;
  // Base distance once per component; the Monte-Carlo loop only draws
  // component indices.
  std::vector<double> base_te(model.components.size());
  for (std::size_t c = 0; c < model.components.size(); ++c) {
    const CoxComponent& comp = model.components[c];
    const double te2 = poisson_distance(comp.sigma1, comp.sigma2, grid_m);
    if (!std::isfinite(te2)) {
      out.infinite = true;
      return out;
    }
    base_te[c] = std::sqrt(te2);
  }

  std::vector<double> te_draws(mc_samples);
  std::vector<double> te2_draws(mc_samples);
  for (std::size_t s = 0; s < mc_samples; ++s) {
    RngStream rng(seed, s);
    const double u = rng.uniform01();
    double acc = 0.0;
    std::size_t pick = model.components.size() - 1;
    for (std::size_t c = 0; c < model.components.size(); ++c) {
      acc += model.components[c].prob;
      if (u < acc) {
        pick = c;
        break;
      }
    }
    te_draws[s] = base_te[pick];
    te2_draws[s] = base_te[pick] * base_te[pick];
  }
  const MeanAndError te = mean_and_standard_error(te_draws);
  const MeanAndError te2 = mean_and_standard_error(te2_draws);
  out.distance = McEstimate{te.mean, te.standard_error, mc_samples};
  out.squared = McEstimate{te2.mean, te2.standard_error, mc_samples};
  return out;
}

BarbourResult barbour_distance(const Intensity& sigma1, const Intensity& sigma2,
                               std::size_t nmax, std::size_t grid_m) {
  BarbourResult result;
  result.te2 = poisson_distance(sigma1, sigma2, grid_m);
  result.closed_form = (1.0 - std::exp(-1.0)) * result.te2;

  // Stratum n has symmetric cost n T_e^2; the Barbour normalization divides
  // by the count, leaving T_e^2 per stratum under Poisson(1) weights.
  const CountDistribution counts = CountDistribution::poisson(1.0, nmax);
  std::vector<StratumCost> per_n;
  per_n.reserve(nmax);
  for (std::size_t n = 1; n <= nmax; ++n) {
    const double stratum_w2 = static_cast<double>(n) * result.te2;
    per_n.push_back(StratumCost{n, stratum_w2 / static_cast<double>(n)});
  }
  result.report = combine_by_count(per_n, counts);
  result.decomposition = result.report.combined.value();
  return result;
}

ShiftBoundResult shift_bound_check(const PoissonModel& model, const AffineMap1D& h,
                                   std::size_t mc_samples, std::uint64_t seed) {
  if (mc_samples == 0) {
    throw std::invalid_argument("shift_bound_check: need at least one sample");
  }
  if (intensity_dim(model.intensity) != 1) {
    throw std::invalid_argument("shift_bound_check: affine displacement is 1-D");
  }

  ShiftBoundResult out;
  if (const auto* d = std::get_if<Density1D>(&model.intensity)) {
    out.bound = 0.5 * d->integrate([&](double x) {
      const double v = h(x);
      return v * v;
    });
  } else {
    const DiscreteMeasure& m = std::get<DiscreteMeasure>(model.intensity);
    std::vector<double> terms(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      const double v = h(m.atom(i)[0]);
      terms[i] = 0.5 * m.weight(i) * v * v;
    }
    out.bound = pairwise_sum(terms);
  }

  auto shifted = [&](const Point& p) { return Point::scalar(p[0] + h(p[0])); };
  std::vector<double> costs(mc_samples);
  for (std::size_t s = 0; s < mc_samples; ++s) {
    RngStream rng(seed, s);
    const Configuration eta = sample_poisson(model, rng);
    const Configuration omega = lift_map(shifted, eta);
    costs[s] = config_cost(eta, omega).cost.value();
  }
  const MeanAndError st = mean_and_standard_error(costs);
  out.estimate = McEstimate{st.mean, st.standard_error, mc_samples};
  out.pass = out.estimate.mean <= out.bound + 3.0 * out.estimate.standard_error + 1e-12;
  return out;
}

ProcessDistanceResult process_distance(const ProcessModel& a, const ProcessModel& b,
                                       const ProcessDistanceOptions& opts) {
  ProcessDistanceResult result;

  // Each process contributes its count law to the gate; a Cox model is read
  // as the mixture of intensity pairs, side 1 for the left process and side
  // 2 for the right one.
  const CountDistribution pa = std::visit(
      [&](const auto& m) -> CountDistribution {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, CoxModel>) {
          return count_pmf(m, CoxSide::first, opts.nmax);
        } else {
          return count_pmf(m, opts.nmax);
        }
      },
      a);
  const CountDistribution pb = std::visit(
      [&](const auto& m) -> CountDistribution {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, CoxModel>) {
          return count_pmf(m, CoxSide::second, opts.nmax);
        } else {
          return count_pmf(m, opts.nmax);
        }
      },
      b);

  result.gate = finiteness_gate(pa, pb, opts.gate_eps);
  if (!result.gate.pass) {
    result.w2 = ExtendedCost::infinite();
    result.route = "count-gate";
    return result;
  }

  if (const auto* pa_model = std::get_if<PoissonModel>(&a)) {
    const auto* pb_model = std::get_if<PoissonModel>(&b);
    if (!pb_model) throw std::invalid_argument("process_distance: unsupported model combination");
    const double mass = pa_model->mass();
    if (std::abs(mass - 1.0) <= 1e-9) {
      result.w2 = ExtendedCost(poisson_distance(pa_model->intensity, pb_model->intensity,
                                                opts.grid_m));
      result.route = "poisson-closed-form";
      if (opts.mc_samples > 0 && intensity_dim(pa_model->intensity) == 1 &&
          std::holds_alternative<Density1D>(pa_model->intensity) &&
          std::holds_alternative<Density1D>(pb_model->intensity)) {
        result.estimate = poisson_coupling_estimate(std::get<Density1D>(pa_model->intensity),
                                                    std::get<Density1D>(pb_model->intensity),
                                                    opts.mc_samples, opts.seed, opts.grid_m);
      }
      return result;
    }
    // Non-unit mass: the closed identity is only stated for probability
    // intensities; report the explicit-coupling upper-bound estimate.
    if (!std::holds_alternative<Density1D>(pa_model->intensity) ||
        !std::holds_alternative<Density1D>(pb_model->intensity)) {
      throw std::invalid_argument(
          "process_distance: non-unit Poisson masses need 1-D density intensities");
    }
    if (opts.mc_samples == 0) {
      throw std::invalid_argument(
          "process_distance: non-unit Poisson masses need mc_samples > 0");
    }
    result.estimate = poisson_coupling_estimate(std::get<Density1D>(pa_model->intensity),
                                                std::get<Density1D>(pb_model->intensity),
                                                opts.mc_samples, opts.seed, opts.grid_m);
    result.w2 = ExtendedCost(result.estimate->mean);
    result.route = "coupling-estimate-upper-bound";
    return result;
  }

  if (const auto* ba_model = std::get_if<BinomialModel>(&a)) {
    const auto* bb_model = std::get_if<BinomialModel>(&b);
    if (!bb_model) throw std::invalid_argument("process_distance: unsupported model combination");
    // Same count by the gate; the product stratum tensorizes to n T_e^2.
    const double te2 = ba_model->n == 0
                           ? 0.0
                           : poisson_distance(ba_model->density, bb_model->density, opts.grid_m);
    result.w2 = ExtendedCost(static_cast<double>(ba_model->n) * te2);
    result.route = "binomial-tensorization";
    return result;
  }

  const auto* ca_model = std::get_if<CoxModel>(&a);
  const auto* cb_model = std::get_if<CoxModel>(&b);
  if (ca_model && cb_model) {
    if (opts.mc_samples == 0) {
      throw std::invalid_argument("process_distance: Cox models need mc_samples > 0");
    }
    // The two processes must be the two sides of one mixture of intensity
    // pairs; distinct mixtures have no joint law to average over.
    const CoxDistanceEstimate est =
        cox_distance(*ca_model, opts.mc_samples, opts.seed, opts.grid_m);
    if (est.infinite) {
      result.w2 = ExtendedCost::infinite();
    } else {
      result.w2 = ExtendedCost(est.w2());
      result.estimate = est.distance;
    }
    result.route = "cox-mixture";
    return result;
  }

  throw std::invalid_argument("process_distance: unsupported model combination");
}

}  // namespace configot
