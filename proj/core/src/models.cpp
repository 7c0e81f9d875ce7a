#include "configot/models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "configot/summation.hpp"

namespace configot {

Density1D::Density1D(std::vector<double> edges, std::vector<double> piece_masses)
    : edges_(std::move(edges)), piece_masses_(std::move(piece_masses)) {
  if (edges_.size() < 2 || edges_.size() != piece_masses_.size() + 1) {
    throw std::invalid_argument("Density1D: need k+1 edges for k pieces");
  }
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (!(edges_[i] > edges_[i - 1])) {
      throw std::invalid_argument("Density1D: edges must be strictly increasing");
    }
  }
  for (double w : piece_masses_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument("Density1D: piece masses must be finite and >= 0");
    }
  }
  total_mass_ = pairwise_sum(piece_masses_);
  if (!(total_mass_ > 0.0)) {
    throw std::invalid_argument("Density1D: total mass must be positive");
  }
}

Density1D Density1D::uniform(double a, double b, double mass) {
  return Density1D({a, b}, {mass});
}

double Density1D::quantile(double u) const {
  if (u < 0.0 || u > 1.0) {
    throw std::invalid_argument("Density1D::quantile: u outside [0, 1]");
  }
  double target = u * total_mass_;
  for (std::size_t i = 0; i < piece_masses_.size(); ++i) {
    if (target <= piece_masses_[i] || i + 1 == piece_masses_.size()) {
      if (piece_masses_[i] <= 0.0) continue;
      const double frac = std::min(1.0, target / piece_masses_[i]);
      return edges_[i] + frac * (edges_[i + 1] - edges_[i]);
    }
    target -= piece_masses_[i];
  }
  return edges_.back();
}

std::vector<double> Density1D::quantile_grid(std::size_t m) const {
  if (m == 0) throw std::invalid_argument("Density1D::quantile_grid: m must be positive");
  std::vector<double> q(m);
  for (std::size_t i = 0; i < m; ++i) {
    q[i] = quantile((static_cast<double>(i) + 0.5) / static_cast<double>(m));
  }
  return q;
}

Density1D Density1D::normalized() const {
  std::vector<double> w(piece_masses_);
  for (double& x : w) x /= total_mass_;
  return Density1D(edges_, std::move(w));
}

double Density1D::integrate(const std::function<double(double)>& f,
                            std::size_t panels_per_piece) const {
  std::vector<double> piece_integrals(piece_masses_.size(), 0.0);
  for (std::size_t i = 0; i < piece_masses_.size(); ++i) {
    if (piece_masses_[i] <= 0.0) continue;
    const double a = edges_[i];
    const double b = edges_[i + 1];
    const double density = piece_masses_[i] / (b - a);
    const std::size_t panels = std::max<std::size_t>(1, panels_per_piece);
    const double h = (b - a) / static_cast<double>(panels);
    std::vector<double> parts(panels);
    for (std::size_t p = 0; p < panels; ++p) {
      const double x0 = a + static_cast<double>(p) * h;
      const double x1 = x0 + h;
      parts[p] = (h / 6.0) * (f(x0) + 4.0 * f(0.5 * (x0 + x1)) + f(x1));
    }
    piece_integrals[i] = density * pairwise_sum(parts);
  }
  return pairwise_sum(piece_integrals);
}

double intensity_mass(const Intensity& sigma) {
  return std::visit([](const auto& s) { return s.total_mass(); }, sigma);
}

Intensity normalize_intensity(const Intensity& sigma) {
  return std::visit([](const auto& s) -> Intensity { return s.normalized(); }, sigma);
}

std::size_t intensity_dim(const Intensity& sigma) {
  if (std::holds_alternative<Density1D>(sigma)) return 1;
  return std::get<DiscreteMeasure>(sigma).dim();
}

PoissonModel::PoissonModel(Intensity sigma) : intensity(std::move(sigma)) {
  if (!(intensity_mass(intensity) > 0.0)) {
    throw std::invalid_argument("PoissonModel: intensity mass must be positive");
  }
}

PoissonModel::PoissonModel(Intensity sigma, double declared_mass)
    : PoissonModel(std::move(sigma)) {
  if (std::abs(mass() - declared_mass) > 1e-9 * std::max(1.0, std::abs(declared_mass))) {
    throw std::invalid_argument("PoissonModel: declared mass disagrees with intensity");
  }
}

BinomialModel::BinomialModel(std::size_t n_points, Intensity d)
    : n(n_points), density(std::move(d)) {
  if (std::abs(intensity_mass(density) - 1.0) > 1e-9) {
    throw std::invalid_argument("BinomialModel: density must have total mass 1");
  }
}

CoxModel::CoxModel(std::vector<CoxComponent> comps) : components(std::move(comps)) {
  if (components.empty()) {
    throw std::invalid_argument("CoxModel: at least one component required");
  }
  std::vector<double> probs(components.size());
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].prob < 0.0) {
      throw std::invalid_argument("CoxModel: negative component probability");
    }
    probs[i] = components[i].prob;
  }
  if (std::abs(pairwise_sum(probs) - 1.0) > 1e-9) {
    throw std::invalid_argument("CoxModel: component probabilities must sum to 1");
  }
}

}  // namespace configot
