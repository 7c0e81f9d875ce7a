#include "configot/json_io.hpp"

#include <string>
#include <utility>
#include <vector>

namespace configot {

namespace {

using nlohmann::json;

double require_number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
  return j.get<double>();
}

const json& require_field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string(what) + ": missing field \"" + key + "\"");
  }
  return j.at(key);
}

std::vector<Point> decode_points(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of points");
  std::vector<Point> points;
  points.reserve(j.size());
  for (const json& pj : j) {
    if (!pj.is_array() || pj.empty()) {
      throw ParseError(std::string(what) + ": a point is a nonempty coordinate array");
    }
    std::vector<double> coords;
    coords.reserve(pj.size());
    for (const json& c : pj) coords.push_back(require_number(c, what));
    points.emplace_back(std::move(coords));
  }
  return points;
}

std::vector<double> decode_doubles(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of numbers");
  std::vector<double> xs;
  xs.reserve(j.size());
  for (const json& c : j) xs.push_back(require_number(c, what));
  return xs;
}

}  // namespace

json encode(const Point& p) { return json(p.coords()); }

json encode(const Configuration& c) {
  json points = json::array();
  for (const Point& p : c) points.push_back(encode(p));
  return json{{"points", std::move(points)}};
}

json encode(const DiscreteMeasure& m) {
  json atoms = json::array();
  for (const Point& p : m.atoms()) atoms.push_back(encode(p));
  return json{{"atoms", std::move(atoms)}, {"weights", m.weights()}};
}

json encode(const ExtendedCost& c) {
  if (!c.is_finite()) return json("inf");
  return json(c.value());
}

json encode(const CountDistribution& d) {
  return json{{"pmf", d.pmf()}, {"tail_mass", d.tail_mass()}};
}

json encode(const TransportPlan& plan) {
  json entries = json::array();
  for (const PlanEntry& e : plan.entries) {
    entries.push_back(json::array({e.source, e.target, e.mass}));
  }
  return json{{"entries", std::move(entries)},
              {"cost", plan.cost},
              {"dual_value", plan.dual_value},
              {"dual_source", plan.dual_source},
              {"dual_target", plan.dual_target}};
}

json encode(const MonotoneMap1D& map) {
  return json{{"breakpoints", map.breakpoints()}, {"values", map.values()}};
}

json encode(const Intensity& sigma) {
  if (const auto* d = std::get_if<Density1D>(&sigma)) {
    if (d->piece_masses().size() == 1) {
      return json{{"kind", "uniform"},
                  {"a", d->edges().front()},
                  {"b", d->edges().back()},
                  {"mass", d->total_mass()}};
    }
    return json{{"kind", "piecewise"}, {"edges", d->edges()}, {"masses", d->piece_masses()}};
  }
  const DiscreteMeasure& m = std::get<DiscreteMeasure>(sigma);
  json atoms = json::array();
  for (const Point& p : m.atoms()) atoms.push_back(encode(p));
  return json{{"kind", "discrete"}, {"atoms", std::move(atoms)}, {"weights", m.weights()}};
}

json encode(const ProcessModel& model) {
  if (const auto* p = std::get_if<PoissonModel>(&model)) {
    return json{{"type", "poisson"},
                {"mass", p->mass()},
                {"density", encode(normalize_intensity(p->intensity))}};
  }
  if (const auto* b = std::get_if<BinomialModel>(&model)) {
    return json{{"type", "binomial"}, {"n", b->n}, {"density", encode(b->density)}};
  }
  const CoxModel& c = std::get<CoxModel>(model);
  json comps = json::array();
  for (const CoxComponent& comp : c.components) {
    comps.push_back(json{{"prob", comp.prob},
                         {"sigma1", encode(comp.sigma1)},
                         {"sigma2", encode(comp.sigma2)}});
  }
  return json{{"type", "cox"}, {"components", std::move(comps)}};
}

json encode(const DecompositionReport& report) {
  json rows = json::array();
  for (const WeightedStratumCost& s : report.per_n) {
    rows.push_back(json{{"n", s.n}, {"w2", s.w2}, {"weight", s.weight}});
  }
  return json{{"per_n", std::move(rows)},
              {"w2", encode(report.combined)},
              {"truncation_error_bound", report.truncation_error_bound}};
}

json encode(const GateReport& gate) {
  return json{{"pass", gate.pass},
              {"worst_bin", gate.worst_bin},
              {"worst_diff", gate.worst_diff},
              {"tail_diff", gate.tail_diff}};
}

json encode(const McEstimate& est) {
  return json{{"mean", est.mean},
              {"standard_error", est.standard_error},
              {"samples", est.samples}};
}

Configuration decode_configuration(const json& j) {
  return Configuration(decode_points(require_field(j, "points", "Configuration"), "Configuration"));
}

DiscreteMeasure decode_discrete_measure(const json& j) {
  auto atoms = decode_points(require_field(j, "atoms", "DiscreteMeasure"), "DiscreteMeasure");
  auto weights = decode_doubles(require_field(j, "weights", "DiscreteMeasure"), "DiscreteMeasure");
  try {
    return DiscreteMeasure(std::move(atoms), std::move(weights));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("DiscreteMeasure: ") + e.what());
  }
}

ExtendedCost decode_extended_cost(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return ExtendedCost::infinite();
    throw ParseError("ExtendedCost: only the string \"inf\" is accepted");
  }
  return ExtendedCost(require_number(j, "ExtendedCost"));
}

Intensity decode_intensity(const json& j) {
  const json& kj = require_field(j, "kind", "Intensity");
  if (!kj.is_string()) throw ParseError("Intensity: \"kind\" must be a string");
  const std::string kind = kj.get<std::string>();
  try {
    if (kind == "uniform") {
      const double a = require_number(require_field(j, "a", "Intensity"), "Intensity.a");
      const double b = require_number(require_field(j, "b", "Intensity"), "Intensity.b");
      const double mass =
          j.contains("mass") ? require_number(j.at("mass"), "Intensity.mass") : 1.0;
      return Density1D::uniform(a, b, mass);
    }
    if (kind == "piecewise") {
      return Density1D(decode_doubles(require_field(j, "edges", "Intensity"), "Intensity.edges"),
                       decode_doubles(require_field(j, "masses", "Intensity"), "Intensity.masses"));
    }
    if (kind == "discrete") {
      return decode_discrete_measure(j);
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("Intensity: ") + e.what());
  }
  throw ParseError("Intensity: unknown kind \"" + kind + "\"");
}

ProcessModel decode_model(const json& j) {
  const json& tj = require_field(j, "type", "Model");
  if (!tj.is_string()) throw ParseError("Model: \"type\" must be a string");
  const std::string type = tj.get<std::string>();
  try {
    if (type == "poisson") {
      const double mass = require_number(require_field(j, "mass", "Model"), "Model.mass");
      if (!(mass > 0.0)) throw ParseError("Model: poisson mass must be positive");
      Intensity density = decode_intensity(require_field(j, "density", "Model"));
      // The density describes the shape; mass scales it into the intensity.
      Intensity normalized = normalize_intensity(density);
      if (const auto* d = std::get_if<Density1D>(&normalized)) {
        std::vector<double> masses(d->piece_masses());
        for (double& w : masses) w *= mass;
        return PoissonModel(Density1D(d->edges(), std::move(masses)), mass);
      }
      const DiscreteMeasure& m = std::get<DiscreteMeasure>(normalized);
      std::vector<double> weights(m.weights());
      for (double& w : weights) w *= mass;
      return PoissonModel(DiscreteMeasure(m.atoms(), std::move(weights)), mass);
    }
    if (type == "binomial") {
      const json& nj = require_field(j, "n", "Model");
      if (!nj.is_number_unsigned()) throw ParseError("Model: binomial n must be a nonneg integer");
      Intensity density = decode_intensity(require_field(j, "density", "Model"));
      return BinomialModel(nj.get<std::size_t>(), normalize_intensity(density));
    }
    if (type == "cox") {
      const json& cj = require_field(j, "components", "Model");
      if (!cj.is_array() || cj.empty()) {
        throw ParseError("Model: cox components must be a nonempty array");
      }
      std::vector<CoxComponent> comps;
      comps.reserve(cj.size());
      for (const json& comp : cj) {
        CoxComponent c;
        c.prob = require_number(require_field(comp, "prob", "Model.cox"), "Model.cox.prob");
        c.sigma1 = decode_intensity(require_field(comp, "sigma1", "Model.cox"));
        c.sigma2 = decode_intensity(require_field(comp, "sigma2", "Model.cox"));
        comps.push_back(std::move(c));
      }
      return CoxModel(std::move(comps));
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("Model: ") + e.what());
  }
  throw ParseError("Model: unknown type \"" + type + "\"");
}

}  // namespace configot
