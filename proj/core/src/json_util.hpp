#pragma once

#include <json.hpp>

#include "nikodym/measure.hpp"
#include "nikodym/rational.hpp"
#include "nikodym/stochastic.hpp"

namespace nikodym::detail {

using Json = nlohmann::ordered_json;

// Writes key = "p/q" and key_decimal = "0.xxx".
void put_rational(Json& obj, const std::string& key, const Rational& r);

Json to_json(const Point& p);
Json to_json(const ConvexPolygon& p);
Json to_json(const DeviationResult& d, const StripQuery& q);
Json to_json(const DiagnosticBounds& d);
Json to_json(const MCEstimate& e);

Rational rational_from_json(const Json& j);

}  // namespace nikodym::detail
