#include <algorithm>
#include <cstdlib>

#include "doctest.h"
#include "schubert/errors.hpp"
#include "schubert/rootsys.hpp"

using namespace schubert;

namespace {
RootVector rv(std::vector<int> c) { return RootVector{std::move(c)}; }
}

TEST_CASE("classical diagrams have the expected shape") {
  const auto a5 = build_diagram(Family::A, 5);
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      if (i == j) continue;
      CHECK(a5->cartan(i, j) == (std::abs(i - j) == 1 ? -1 : 0));
    }
  const auto a1 = build_diagram(Family::A, 1);
  CHECK(a1->rank() == 1);
  CHECK(a1->cartan(1, 1) == 2);

  const auto d5 = build_diagram(Family::D, 5);
  CHECK(d5->neighbors(3) == std::vector<int>{2, 4, 5});
  CHECK_FALSE(d5->adjacent(4, 5));

  const auto b3 = build_diagram(Family::B, 3);
  CHECK(b3->cartan(3, 2) == -2);
  CHECK(b3->cartan(2, 3) == -1);
  const auto c3 = build_diagram(Family::C, 3);
  CHECK(c3->cartan(2, 3) == -2);
  CHECK(c3->cartan(3, 2) == -1);

  CHECK(build_diagram(Family::D, 2)->neighbors(1).empty());
  CHECK(build_diagram(Family::D, 3)->neighbors(1) == std::vector<int>{2, 3});
}

TEST_CASE("invalid ranks and names are rejected") {
  CHECK_THROWS_AS(build_diagram(Family::A, 0), InvalidArgument);
  CHECK_THROWS_AS(build_diagram(Family::B, 1), InvalidArgument);
  CHECK_THROWS_AS(build_diagram(Family::C, 1), InvalidArgument);
  CHECK_THROWS_AS(build_diagram(Family::D, 1), InvalidArgument);
  CHECK_THROWS_AS(parse_diagram("Q3"), InvalidArgument);
  CHECK_THROWS_AS(parse_diagram("A"), InvalidArgument);
  CHECK_THROWS_AS(parse_diagram("Ax"), InvalidArgument);
  CHECK(parse_diagram("d5")->name() == "D5");
}

TEST_CASE("Cartan matrices are validated") {
  CartanMatrix c(2);
  c.set(1, 2, -3);
  c.set(2, 1, -1);
  CHECK_THROWS_AS(make_diagram(c), InvalidArgument);
  c.set(1, 2, 0);
  CHECK_THROWS_AS(make_diagram(c), InvalidArgument);
  c.set(1, 2, -1);
  CHECK(make_diagram(c)->rank() == 2);
  c.set(1, 1, 3);
  CHECK_THROWS_AS(make_diagram(c), InvalidArgument);
}

TEST_CASE("simple reflections of roots in A3") {
  const auto a3 = build_diagram(Family::A, 3);
  CHECK(reflect_root(*a3, 1, rv({0, 1, 0})) == rv({1, 1, 0}));
  CHECK(reflect_root(*a3, 1, rv({1, 0, 0})) == rv({-1, 0, 0}));
  CHECK(reflect_root(*a3, 1, rv({0, 0, 1})) == rv({0, 0, 1}));
  CHECK(to_string(rv({1, 1, 0})) == "a1 + a2");
}

TEST_CASE("positive root counts and closure") {
  CHECK(positive_roots(*build_diagram(Family::A, 3)).size() == 6);
  CHECK(positive_roots(*build_diagram(Family::A, 1)) == std::vector<RootVector>{rv({1})});
  CHECK(positive_roots(*build_diagram(Family::B, 2)).size() == 4);
  for (int n = 1; n <= 6; ++n) {
    CHECK(positive_roots(*build_diagram(Family::A, n)).size() == static_cast<std::size_t>(n * (n + 1) / 2));
    if (n >= 2) {
      CHECK(positive_roots(*build_diagram(Family::B, n)).size() == static_cast<std::size_t>(n * n));
      CHECK(positive_roots(*build_diagram(Family::C, n)).size() == static_cast<std::size_t>(n * n));
      CHECK(positive_roots(*build_diagram(Family::D, n)).size() == static_cast<std::size_t>(n * (n - 1)));
    }
  }
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    const auto d = build_diagram(f, 4);
    const auto& roots = positive_roots(*d);
    for (const auto& r : roots)
      for (int i = 1; i <= 4; ++i) {
        const RootVector s = reflect_root(*d, i, r);
        CHECK(reflect_root(*d, i, s) == r);
        CHECK((s.is_positive() || s.is_negative()));
        const RootVector pos = s.is_positive() ? s : -s;
        CHECK(std::find(roots.begin(), roots.end(), pos) != roots.end());
      }
  }
}
