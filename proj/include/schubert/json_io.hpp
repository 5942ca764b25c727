#pragma once

#include "json.hpp"
#include "schubert/polyring.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

using Json = nlohmann::json;

/// [{"coeff": c, "exponents": [...]}, ...] in increasing exponent order.
Json to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const Json& j, int nvars);

/// {"num": ..., "den": ...}; integers outside int64 are written as strings.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// {"coeffs": [{num, den}, ...], "threshold": t}, coefficients by degree.
Json to_json(const UniPolyQ& p);
UniPolyQ unipoly_from_json(const Json& j);

Json to_json(const Word& w);

}  // namespace schubert
