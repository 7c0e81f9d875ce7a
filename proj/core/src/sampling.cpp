#include "configot/sampling.hpp"

#include <stdexcept>
#include <vector>

namespace configot {

namespace {

Point sample_from_density(const Density1D& d, RngStream& rng) {
  return Point::scalar(d.quantile(rng.uniform01()));
}

Point sample_from_discrete(const DiscreteMeasure& m, RngStream& rng) {
  const double target = rng.uniform01() * m.total_mass();
  double acc = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    acc += m.weight(i);
    if (target < acc) return m.atom(i);
  }
  return m.atom(m.size() - 1);
}

}  // namespace

Point sample_point(const Intensity& sigma, RngStream& rng) {
  if (const auto* d = std::get_if<Density1D>(&sigma)) {
    return sample_from_density(*d, rng);
  }
  return sample_from_discrete(std::get<DiscreteMeasure>(sigma), rng);
}

Configuration sample_poisson(const PoissonModel& model, RngStream& rng) {
  const double lambda = model.mass();
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("sample_poisson: lambda must be positive");
  }
  const std::uint64_t n = rng.poisson(lambda);
  std::vector<Point> points;
  points.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) points.push_back(sample_point(model.intensity, rng));
  return Configuration(std::move(points));
}

Configuration sample_poisson(const PoissonModel& model, std::uint64_t seed) {
  RngStream rng(seed, 0);
  return sample_poisson(model, rng);
}

Configuration sample_binomial(const BinomialModel& model, RngStream& rng) {
  std::vector<Point> points;
  points.reserve(model.n);
  for (std::size_t i = 0; i < model.n; ++i) points.push_back(sample_point(model.density, rng));
  return Configuration(std::move(points));
}

Configuration sample_binomial(const BinomialModel& model, std::uint64_t seed) {
  RngStream rng(seed, 0);
  return sample_binomial(model, rng);
}

CoxSample sample_cox(const CoxModel& model, RngStream& rng) {
  const double u = rng.uniform01();
  double acc = 0.0;
  std::size_t pick = model.components.size() - 1;
  for (std::size_t i = 0; i < model.components.size(); ++i) {
    acc += model.components[i].prob;
    if (u < acc) {
      pick = i;
      break;
    }
  }
  const CoxComponent& comp = model.components[pick];
  CoxSample out;
  out.component = pick;
  out.eta1 = sample_poisson(PoissonModel(comp.sigma1), rng);
  out.eta2 = sample_poisson(PoissonModel(comp.sigma2), rng);
  return out;
}

CoxSample sample_cox(const CoxModel& model, std::uint64_t seed) {
  RngStream rng(seed, 0);
  return sample_cox(model, rng);
}

}  // namespace configot
