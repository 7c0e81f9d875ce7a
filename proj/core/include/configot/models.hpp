#pragma once

#include <cstddef>
#include <functional>
#include <variant>
#include <vector>

#include "configot/discrete_measure.hpp"

namespace configot {

/// Piecewise-constant density on consecutive intervals of R, used as a
/// diffuse intensity measure. Stored as interval edges plus the mass of each
/// piece.
class Density1D {
 public:
  Density1D(std::vector<double> edges, std::vector<double> piece_masses);

  static Density1D uniform(double a, double b, double mass = 1.0);

  double total_mass() const noexcept { return total_mass_; }
  const std::vector<double>& edges() const noexcept { return edges_; }
  const std::vector<double>& piece_masses() const noexcept { return piece_masses_; }

  /// Quantile of the normalized law, u in [0, 1].
  double quantile(double u) const;

  /// Quantile grid at midpoints u_i = (i + 1/2) / m.
  std::vector<double> quantile_grid(std::size_t m) const;

  Density1D normalized() const;

  /// Integral of f against the measure (composite Simpson per piece; exact
  /// for cubics, O(h^4) otherwise).
  double integrate(const std::function<double(double)>& f,
                   std::size_t panels_per_piece = 256) const;

 private:
  std::vector<double> edges_;
  std::vector<double> piece_masses_;
  double total_mass_ = 0.0;
};

/// An intensity measure is either a 1-D density or a discrete measure in any
/// dimension (the sampled/discretized representation).
using Intensity = std::variant<DiscreteMeasure, Density1D>;

double intensity_mass(const Intensity& sigma);
Intensity normalize_intensity(const Intensity& sigma);
std::size_t intensity_dim(const Intensity& sigma);

/// Poisson point process with the given intensity; the count law is
/// Poisson(total mass).
struct PoissonModel {
  Intensity intensity;

  explicit PoissonModel(Intensity sigma);
  PoissonModel(Intensity sigma, double declared_mass);  // checks 1e-9 agreement

  double mass() const { return intensity_mass(intensity); }
};

/// Exactly n i.i.d. points from a probability density.
struct BinomialModel {
  std::size_t n = 0;
  Intensity density;

  BinomialModel(std::size_t n_points, Intensity d);
};

/// Cox processes as a finite mixture over correlated intensity pairs: a
/// component is drawn by probability, then each side is a Poisson process
/// with its intensity. This is the seedable sampler of intensity pairs the
/// distance formulas average over.
struct CoxComponent {
  double prob = 0.0;
  Intensity sigma1;
  Intensity sigma2;
};

struct CoxModel {
  std::vector<CoxComponent> components;

  explicit CoxModel(std::vector<CoxComponent> comps);
};

}  // namespace configot
