#pragma once

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "configot/configuration.hpp"
#include "configot/count_distribution.hpp"
#include "configot/discrete_measure.hpp"
#include "configot/extended_cost.hpp"
#include "configot/models.hpp"
#include "configot/process_distance.hpp"
#include "configot/transport_1d.hpp"
#include "configot/transport_plan.hpp"

namespace configot {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Wire formats:
//   Configuration    {"points": [[..], ..]}
//   DiscreteMeasure  {"atoms": [[..], ..], "weights": [..]}
//   ExtendedCost     number, or the string "inf"
//   Density          {"kind": "uniform", "a": 0, "b": 1, "mass": 1}
//                    {"kind": "piecewise", "edges": [..], "masses": [..]}
//                    {"kind": "discrete", "atoms": [[..], ..], "weights": [..]}
//   Model            {"type": "poisson", "mass": 1.0, "density": {..}}
//                    {"type": "binomial", "n": 3, "density": {..}}
//                    {"type": "cox", "components":
//                        [{"prob": 0.5, "sigma1": {..}, "sigma2": {..}}, ..]}

nlohmann::json encode(const Point& p);
nlohmann::json encode(const Configuration& c);
nlohmann::json encode(const DiscreteMeasure& m);
nlohmann::json encode(const ExtendedCost& c);
nlohmann::json encode(const CountDistribution& d);
nlohmann::json encode(const TransportPlan& plan);
nlohmann::json encode(const MonotoneMap1D& map);
nlohmann::json encode(const Intensity& sigma);
nlohmann::json encode(const ProcessModel& model);
nlohmann::json encode(const DecompositionReport& report);
nlohmann::json encode(const GateReport& gate);
nlohmann::json encode(const McEstimate& est);

Configuration decode_configuration(const nlohmann::json& j);
DiscreteMeasure decode_discrete_measure(const nlohmann::json& j);
ExtendedCost decode_extended_cost(const nlohmann::json& j);
Intensity decode_intensity(const nlohmann::json& j);
ProcessModel decode_model(const nlohmann::json& j);

}  // namespace configot
