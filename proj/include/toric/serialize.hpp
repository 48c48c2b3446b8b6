#pragma once

// JSON encodings. Rationals are strings "p/q", Gaussian rationals
// {"re": "p/q", "im": "p/q"}, polynomials coefficient lists from the
// constant term upward. Malformed input raises Error(InvalidInput).

#include <json.hpp>

#include "toric/construct.hpp"
#include "toric/ensemble.hpp"
#include "toric/metrics.hpp"
#include "toric/singularity.hpp"

namespace toric {

using json = nlohmann::ordered_json;

json to_json(const Rat& r);
json to_json(const GaussRat& g);
json to_json(const PolyQ& p);
json to_json(const Point& p);
json to_json(const TwistedFn& f);
json to_json(const ModulusScale& s);
json to_json(const Curve& c);
json to_json(const PrescribedData& d);
json to_json(const OneForm& f);
json to_json(const Ensemble& e);
json to_json(const SingularityDatum& d);
json to_json(const RhoVector& r);
json to_json(const DegreeCandidate& d);
json to_json(const GridSpec& g);
json summary_json(const PDEReport& r);

template <typename T>
json to_json(const std::vector<T>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Rat rat_from_json(const json& j);
GaussRat gauss_from_json(const json& j);
PolyQ poly_from_json(const json& j);
TwistedFn twisted_from_json(const json& j);
Curve curve_from_json(const json& j);
PrescribedData prescribed_from_json(const json& j);
OneForm form_from_json(const json& j);
Ensemble ensemble_from_json(const json& j);
SingularityDatum datum_from_json(const json& j);
GridSpec grid_from_json(const json& j);

}  // namespace toric
