#include <set>

#include "doctest.h"
#include "oracles/brute.hpp"
#include "schubert/errors.hpp"
#include "schubert/weyl.hpp"

using namespace schubert;

TEST_CASE("from_word, length and canonical words") {
  const auto a3 = build_diagram(Family::A, 3);
  const WeylElement w = from_word(a3, {1, 2, 3, 1});
  CHECK(w.length() == 4);
  CHECK(to_permutation(w) == std::vector<int>{3, 2, 4, 1});
  CHECK(from_word(a3, {}).is_identity());
  CHECK(from_word(a3, {1, 1}).is_identity());
  CHECK(from_word(build_diagram(Family::B, 2), {1, 2, 1, 2}).length() == 4);

  CHECK(WeylElement::identity(a3).canonical_reduced_word().empty());
  CHECK(from_word(a3, {2}).canonical_reduced_word() == Word{2});
  const Word cw = w.canonical_reduced_word();
  CHECK(cw.size() == 4);
  CHECK(from_word(a3, cw) == w);
  CHECK(is_reduced_word(w, {1, 2, 3, 1}));
  CHECK_FALSE(is_reduced_word(w, {1, 2, 3, 1, 2, 2}));
}

TEST_CASE("composition order") {
  const auto a2 = build_diagram(Family::A, 2);
  const WeylElement s1 = from_word(a2, {1}), s2 = from_word(a2, {2});
  CHECK(s1 * s2 == from_word(a2, {1, 2}));
  // s1 s2 (alpha_1) = s1(alpha_1 + alpha_2) = alpha_2
  CHECK(from_word(a2, {1, 2}).image_of_simple(1) == RootVector{{0, 1}});
  CHECK(to_permutation(from_word(a2, {2, 1})) == std::vector<int>{3, 1, 2});
  CHECK(from_permutation(a2, {3, 1, 2}) == from_word(a2, {2, 1}));
  CHECK(from_word(a2, {1, 2}).inverse() == from_word(a2, {2, 1}));
  CHECK(s1.times_simple(2) == s1 * s2);
  CHECK(s1.simple_times(2) == s2 * s1);
}

TEST_CASE("parse_element grammar") {
  const auto a3 = build_diagram(Family::A, 3);
  CHECK(parse_element(a3, "1,2,3,1") == from_word(a3, {1, 2, 3, 1}));
  CHECK(parse_element(a3, "3241") == from_word(a3, {1, 2, 3, 1}));
  CHECK(parse_element(a3, "e").is_identity());
  CHECK(parse_element(a3, "").is_identity());
  CHECK_THROWS_AS(parse_element(a3, "1,5"), InvalidArgument);
  CHECK_THROWS_AS(parse_element(a3, "1,x"), InvalidArgument);
}

TEST_CASE("Bruhat order examples") {
  const auto a3 = build_diagram(Family::A, 3);
  const WeylElement w = from_word(a3, {1, 2, 3, 1});
  CHECK(bruhat_leq(from_word(a3, {1, 3}), w));
  CHECK(bruhat_leq(WeylElement::identity(a3), w));
  const auto a2 = build_diagram(Family::A, 2);
  CHECK_FALSE(bruhat_leq(from_word(a2, {2}), from_word(a2, {1})));
}

TEST_CASE("lower intervals and spheres") {
  const auto a1 = build_diagram(Family::A, 1);
  const auto a2 = build_diagram(Family::A, 2);
  const auto a3 = build_diagram(Family::A, 3);
  CHECK(lower_interval(WeylElement::identity(a3)).size() == 1);
  CHECK(lower_interval(from_word(a1, {1})).size() == 2);
  CHECK(lower_interval(from_word(a2, {1, 2})).size() == 4);
  CHECK(length_sphere(a3, 0).size() == 1);
  CHECK(length_sphere(a3, 1).size() == 3);
  const auto sphere = length_sphere(a2, 2);
  REQUIRE(sphere.size() == 2);
  CHECK(sphere[0] == from_word(a2, {1, 2}));
  CHECK(sphere[1] == from_word(a2, {2, 1}));
}

TEST_CASE("group orders and canonical word round trips") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = family_min_rank(f); n <= 4; ++n) {
      const auto d = build_diagram(f, n);
      long long expected = 1;
      if (f == Family::A)
        for (int i = 2; i <= n + 1; ++i) expected *= i;
      else {
        for (int i = 2; i <= n; ++i) expected *= i;
        expected <<= (f == Family::D ? n - 1 : n);
      }
      std::size_t total = 0;
      for (int k = 0; k <= static_cast<int>(positive_roots(*d).size()); ++k) total += length_sphere(d, k).size();
      CHECK(total == static_cast<std::size_t>(expected));
      const auto all = all_elements(d);
      CHECK(all.size() == static_cast<std::size_t>(expected));
      for (const auto& w : all) {
        const Word cw = w.canonical_reduced_word();
        CHECK(static_cast<int>(cw.size()) == w.length());
        CHECK(from_word(d, cw) == w);
      }
    }
}

TEST_CASE("Bruhat order is a partial order matching the lifting-property oracle") {
  for (Family f : {Family::A, Family::B}) {
    const auto elems = all_elements(build_diagram(f, 3));
    for (const auto& u : elems)
      for (const auto& v : elems) {
        const bool uv = bruhat_leq(u, v);
        CHECK(uv == oracle::brute_bruhat_leq(u, v));
        if (uv && bruhat_leq(v, u)) CHECK(u == v);
      }
    for (const auto& u : elems) {
      CHECK(bruhat_leq(u, u));
      const auto below = lower_interval(u);
      for (const auto& v : below)
        for (const auto& x : lower_interval(v)) CHECK(bruhat_leq(x, u));
    }
  }
}

TEST_CASE("Bruhat test does not depend on the seeding reduced word") {
  const auto elems = all_elements(build_diagram(Family::A, 3));
  for (const auto& w : elems)
    for (const Word& word : all_reduced_words(w))
      for (const auto& v : elems) CHECK(bruhat_leq(v, w, word) == bruhat_leq(v, w));
}

TEST_CASE("all reduced words of the longest element of A2") {
  const auto a2 = build_diagram(Family::A, 2);
  const auto words = all_reduced_words(from_word(a2, {1, 2, 1}));
  CHECK(words == std::vector<Word>{{1, 2, 1}, {2, 1, 2}});
}
