#pragma once

#include <json.hpp>

#include "fgl/bi_series.hpp"

namespace fgl {

// JSON wire formats. Rationals travel as decimal strings since coefficients
// routinely exceed 64-bit integer range.
//
//   polynomial:  [ {"e":[e1,e2,e3,e4], "num":"...", "den":"..."} , ... ]
//   univariate:  { "order":N, "variable":"x",
//                  "coefficients":[ {"x_power":n, "poly":[...]}, ... ] }
//   bivariate:   { "order":N, "variables":["x","y"],
//                  "coefficients":[ {"powers":[i,j], "poly":[...]}, ... ] }

nlohmann::json poly_to_json(const GradedPoly &p);
GradedPoly poly_from_json(const nlohmann::json &j);

nlohmann::json series_to_json(const UniSeries &s, const std::string &variable = "x");
UniSeries series_from_json(const nlohmann::json &j);

nlohmann::json biseries_to_json(const BiSeries &s);
BiSeries biseries_from_json(const nlohmann::json &j);

} // namespace fgl
