#include "schubert/json_io.hpp"

#include "schubert/errors.hpp"

namespace schubert {

namespace {

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw InvalidArgument("expected an integer in JSON");
}

}  // namespace

Json to_json(const MultiPoly& p) {
  Json arr = Json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back(Json{{"exponents", e}, {"coeff", c}});
  return arr;
}

MultiPoly multipoly_from_json(const Json& j, int nvars) {
  if (!j.is_array()) throw InvalidArgument("MultiPoly JSON must be an array of terms");
  MultiPoly p(nvars);
  for (const auto& term : j) p.add_term(term.at("exponents").get<Exponent>(), term.at("coeff").get<std::int64_t>());
  return p;
}

Json to_json(const Rational& q) {
  return Json{{"num", big_to_json(numerator(q))}, {"den", big_to_json(denominator(q))}};
}

Rational rational_from_json(const Json& j) {
  const BigInt den = big_from_json(j.at("den"));
  if (den == 0) throw InvalidArgument("zero denominator in JSON rational");
  return Rational(big_from_json(j.at("num")), den);
}

Json to_json(const UniPolyQ& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"coeffs", coeffs}, {"threshold", p.threshold()}};
}

UniPolyQ unipoly_from_json(const Json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
  return UniPolyQ(std::move(coeffs), j.at("threshold").get<int>());
}

Json to_json(const Word& w) { return Json(std::vector<int>(w.begin(), w.end())); }

}  // namespace schubert
