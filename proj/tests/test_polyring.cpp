#include <random>

#include "doctest.h"
#include "schubert/errors.hpp"
#include "schubert/json_io.hpp"
#include "schubert/polyring.hpp"

using namespace schubert;

namespace {
MultiPoly lin(std::vector<int> c) { return MultiPoly::linear(RootVector{std::move(c)}); }
}

TEST_CASE("reflections act on polynomials") {
  const auto a3 = build_diagram(Family::A, 3);
  CHECK(apply_reflection(*a3, 1, lin({0, 1, 1})) == lin({1, 1, 1}));
  CHECK(apply_reflection(*a3, 1, MultiPoly::constant(3, 1)) == MultiPoly::constant(3, 1));
  CHECK(apply_reflection(*a3, 1, lin({1, 0, 0})) == -lin({1, 0, 0}));
  const MultiPoly p = lin({1, 2, 0}) * lin({0, 1, 1}) * lin({1, 0, 3}) + MultiPoly::constant(3, 5);
  for (int i = 1; i <= 3; ++i) CHECK(apply_reflection(*a3, i, apply_reflection(*a3, i, p)) == p);
}

TEST_CASE("exact division") {
  const MultiPoly a1 = lin({1, 0, 0});
  CHECK(exact_divide(a1 * a1 + a1 * lin({0, 1, 0}), a1) == lin({1, 1, 0}));
  CHECK(exact_divide(MultiPoly(3), a1).is_zero());
  CHECK(exact_divide(lin({1, 1, 0}) * lin({1, 1, 1}), lin({1, 1, 0})) == lin({1, 1, 1}));
  CHECK_THROWS_AS(exact_divide(a1 + MultiPoly::constant(3, 1), lin({0, 1, 0})), NonExactDivision);
  CHECK_THROWS(exact_divide(a1, MultiPoly(3)));

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    MultiPoly p(3), q(3);
    for (int t = 0; t < 3; ++t) {
      p.add_term({coef(rng) + 3, coef(rng) + 3, coef(rng) + 3}, coef(rng));
      q.add_term({coef(rng) + 3, coef(rng) + 3, coef(rng) + 3}, coef(rng));
    }
    if (q.is_zero()) continue;
    CHECK(exact_divide(p * q, q) == p);
  }
}

TEST_CASE("degrees and printing") {
  const MultiPoly p = lin({1, 1, 0}) * lin({1, 1, 1});
  CHECK(p.homogeneous_degree() == 2);
  CHECK_FALSE((p + MultiPoly::constant(3, 1)).homogeneous_degree().has_value());
  CHECK(to_string(p, true) == "a1^2 + 2*a1*a2 + a1*a3 + a2^2 + a2*a3");
  CHECK(to_string(MultiPoly(3)) == "0");
}

TEST_CASE("overflow is detected") {
  MultiPoly big = MultiPoly::constant(1, std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big += MultiPoly::constant(1, 1), ConsistencyError);
}

TEST_CASE("interpolation") {
  const std::vector<Sample> lin_samples{{1, 2}, {2, 4}};
  const UniPolyQ p = interpolate(lin_samples, 1);
  CHECK(p.same_polynomial(UniPolyQ({0, 2}, 0)));
  CHECK(p.threshold() == 1);

  const std::vector<Sample> flat{{0, 1}, {1, 1}, {2, 1}};
  CHECK(interpolate(flat).same_polynomial(UniPolyQ::constant(1)));

  const std::vector<Sample> g{{1, 0}, {2, 10}, {3, 24}, {4, 42}};
  const UniPolyQ q = interpolate(g, 2);
  CHECK(q.same_polynomial(UniPolyQ({-6, 4, 2}, 0)));
  CHECK(to_string(q) == "2n^2 + 4n - 6");
  for (const auto& s : g) CHECK(q.evaluate(s.x) == s.y);
  for (int n = 1; n < 30; ++n) CHECK(denominator(q.evaluate(n)) == 1);

  const std::vector<Sample> cubic{{0, 0}, {1, 1}, {2, 8}, {3, 27}};
  CHECK_THROWS_AS(interpolate(cubic, 2), ConsistencyError);
  const std::vector<Sample> dup{{1, 1}, {1, 2}};
  CHECK_THROWS_AS(interpolate(dup), InvalidArgument);

  const std::vector<Sample> half{{0, 0}, {1, 0}, {2, 1}, {3, 3}};
  const UniPolyQ h = interpolate(half, 2);
  CHECK(h.lead() == Rational(1, 2));
  CHECK(to_string(h) == "(1/2)n^2 - (1/2)n");
}

TEST_CASE("JSON round trips") {
  const MultiPoly p = lin({1, 1, 0}) * lin({1, 1, 1}) - MultiPoly::constant(3, 4);
  const Json jp = to_json(p);
  CHECK(multipoly_from_json(Json::parse(jp.dump()), 3) == p);
  CHECK(Json::parse(jp.dump()).dump() == jp.dump());
  const UniPolyQ q({Rational(-3, 2), 0, Rational(1, 2)}, 4);
  const Json jq = to_json(q);
  CHECK(unipoly_from_json(Json::parse(jq.dump())) == q);
  CHECK(jq.dump() ==
        R"({"coeffs":[{"den":2,"num":-3},{"den":1,"num":0},{"den":2,"num":1}],"threshold":4})");
}
