#include "configot/count_laws.hpp"

#include <vector>

namespace configot {

CountDistribution count_pmf(const PoissonModel& model, std::size_t nmax) {
  return CountDistribution::poisson(model.mass(), nmax);
}

CountDistribution count_pmf(const BinomialModel& model, std::size_t nmax) {
  return CountDistribution::fixed(model.n, nmax);
}

CountDistribution count_pmf(const CoxModel& model, CoxSide side, std::size_t nmax) {
  std::vector<double> probs;
  std::vector<CountDistribution> parts;
  probs.reserve(model.components.size());
  parts.reserve(model.components.size());
  for (const CoxComponent& comp : model.components) {
    probs.push_back(comp.prob);
    const Intensity& sigma = side == CoxSide::first ? comp.sigma1 : comp.sigma2;
    parts.push_back(CountDistribution::poisson(intensity_mass(sigma), nmax));
  }
  return CountDistribution::mixture(probs, parts);
}

}  // namespace configot
