#pragma once

// JSON forms of the library's values.  Exact rationals are written as
// "num/den" strings (plain "num" when integral), never as floats.

#include "negcurve/herzog.hpp"
#include "negcurve/irreducibility.hpp"
#include "negcurve/nct.hpp"
#include "negcurve/search.hpp"
#include "negcurve/symbolic_power.hpp"
#include "negcurve/toric.hpp"

#include <json.hpp>

namespace negcurve {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const Integer& z);
Rational rational_from_json(const Json& j);

/// {"char": p, "terms": [{"a": int, "b": int, "c": "rational"}]}
Json to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const Json& j);

/// {"vertices": [[x, y], ...]}; rational coordinates as strings.
Json to_json(const IntegralPolygon& p);
Json to_json(const RationalPolygon& p);
RationalPolygon polygon_from_json(const Json& j);

Json to_json(const HerzogData& h);
Json to_json(const IrreducibilityCertificate& c);
Json to_json(const NctReport& r);
Json to_json(const Thm36Report& r);
Json to_json(const NegativeCurveReport& r);
Json to_json(const Catalog& c);
Json to_json(const ClassGroup& g);
Json to_json(const Fan2D& fan);
Json to_json(const LatticeCounts& c);
Json to_json(const EhrhartData& e);

}  // namespace negcurve
