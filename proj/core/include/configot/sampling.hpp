#pragma once

#include <cstdint>

#include "configot/configuration.hpp"
#include "configot/models.hpp"
#include "configot/rng.hpp"

namespace configot {

/// One point from the normalized intensity (inverse CDF for densities,
/// categorical for discrete measures).
Point sample_point(const Intensity& sigma, RngStream& rng);

/// N ~ Poisson(mass), then N i.i.d. points from intensity/mass.
Configuration sample_poisson(const PoissonModel& model, RngStream& rng);
Configuration sample_poisson(const PoissonModel& model, std::uint64_t seed);

/// Exactly n i.i.d. points from the density.
Configuration sample_binomial(const BinomialModel& model, RngStream& rng);
Configuration sample_binomial(const BinomialModel& model, std::uint64_t seed);

struct CoxSample {
  Configuration eta1;
  Configuration eta2;
  std::size_t component = 0;  // which intensity pair was drawn
};

/// Draws an intensity pair from the mixture, then independent Poisson
/// configurations with those intensities.
CoxSample sample_cox(const CoxModel& model, RngStream& rng);
CoxSample sample_cox(const CoxModel& model, std::uint64_t seed);

}  // namespace configot
