#pragma once

#include <cstddef>

#include "configot/count_distribution.hpp"
#include "configot/models.hpp"

namespace configot {

enum class CoxSide { first, second };

/// Exact truncated count laws of the models. Poisson(lambda) uses the
/// recursion p_{n+1} = p_n lambda/(n+1); a Cox mixture mixes the component
/// Poisson laws.
CountDistribution count_pmf(const PoissonModel& model, std::size_t nmax = 20);
CountDistribution count_pmf(const BinomialModel& model, std::size_t nmax = 20);
CountDistribution count_pmf(const CoxModel& model, CoxSide side, std::size_t nmax = 20);

}  // namespace configot
