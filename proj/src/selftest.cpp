#include "schubert/selftest.hpp"

#include <functional>
#include <string>

#include "schubert/constants.hpp"
#include "schubert/counting.hpp"
#include "schubert/gamma.hpp"
#include "schubert/json_io.hpp"
#include "schubert/restriction.hpp"
#include "schubert/support.hpp"

namespace schubert {

namespace {

MultiPoly lin(std::vector<int> coords) { return MultiPoly::linear(RootVector{std::move(coords)}); }

bool check_example() {
  const DiagramPtr a3 = build_diagram(Family::A, 3);
  const Word w_word{1, 2, 3, 1};
  const WeylElement v = from_word(a3, {1, 3});
  const WeylElement w = from_word(a3, w_word);
  const MultiPoly expected = lin({1, 1, 0}) * lin({1, 1, 1});
  return restrict(v, w) == expected && restrict_direct(v, w, w_word) == expected;
}

bool check_vanishing() {
  const auto elems = all_elements(build_diagram(Family::A, 3));
  for (const auto& w : elems) {
    const auto at_w = restrict_all(w);
    for (const auto& v : elems) {
      const bool below = bruhat_leq(v, w);
      const MultiPoly r = restrict(v, w);
      if (r.is_zero() == below) return false;
      if (below && (at_w.count(v) == 0 || !(at_w.at(v) == r))) return false;
    }
  }
  return true;
}

bool check_gkm_identity() {
  const auto elems = all_elements(build_diagram(Family::A, 3));
  StructureConstants sc;
  for (const auto& u : elems)
    for (const auto& v : elems) {
      if (u.length() + v.length() > 2) continue;
      for (const auto& x : elems) {
        const auto& at_x = sc.restrictions_at(x);
        MultiPoly lhs = restrict(u, x) * restrict(v, x);
        MultiPoly rhs(3);
        for (const auto& [y, xi] : at_x) rhs += sc.equivariant(u, v, y) * xi;
        if (!(lhs == rhs)) return false;
      }
    }
  return true;
}

bool check_support_word_independence() {
  for (const auto& w : all_elements(build_diagram(Family::A, 3))) {
    const DecoratedSupport ref = dynkin_support(w);
    for (const Word& word : all_reduced_words(w)) {
      const DecoratedSupport s = dynkin_support(w, word);
      if (s.profile() != ref.profile() || s.multiplicities != ref.multiplicities) return false;
      for (std::size_t i = 0; i < s.components.size(); ++i)
        if (s.components[i].vertices != ref.components[i].vertices) return false;
    }
  }
  return true;
}

bool check_class_keys() {
  std::vector<WeylElement> elems;
  for (int r = 1; r <= 4; ++r)
    for (int k = 0; k <= 2; ++k)
      for (auto& w : length_sphere(build_diagram(Family::A, r), k)) elems.push_back(w);
  for (const auto& a : elems) {
    const std::string ka = canonical_class_rep(a).key;
    for (const auto& b : elems)
      if ((ka == canonical_class_rep(b).key) != equivalent(a, b)) return false;
  }
  return true;
}

bool check_counting() {
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int k = 1; k <= 2; ++k)
      for (const auto& c : length_classes(f, k)) {
        const int start = std::max(c.nw.threshold(), family_min_rank(f));
        for (int n = start; n < start + 4; ++n) {
          const auto count = N_w_count(c.rep, n);
          if (c.nw.evaluate(n) != Rational(count)) return false;
          if (N_w_count_by_stabilizer(c.rep, n) != count) return false;
        }
      }
  return true;
}

bool check_gamma(int jobs) {
  GammaOptions opts;
  opts.jobs = jobs;
  const GammaResult g = gamma_polynomial(Family::A, 2, opts);
  if (!g.polynomial.same_polynomial(UniPolyQ({Rational(-6), Rational(4), Rational(2)}, 0))) return false;
  for (int n = 1; n <= 4; ++n)
    if (g.polynomial.evaluate(n) != Rational(gamma_bruteforce(Family::A, 2, n, opts))) return false;
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int k = 0; k <= 2; ++k) {
      const LeadTerm lt = lead_term(f, k, opts);
      Rational expected(1);
      for (int i = 1; i <= k; ++i) expected = expected * 2 / i;
      if (lt.degree != k || lt.coeff != expected || lt.witness_inner_sum != (std::int64_t{1} << k)) return false;
    }
  return true;
}

bool check_json_round_trip() {
  const GammaResult g = gamma_polynomial(Family::B, 1);
  const Json doc = to_json(g.polynomial);
  if (Json::parse(doc.dump()).dump() != doc.dump()) return false;
  if (!(unipoly_from_json(doc) == g.polynomial)) return false;
  const MultiPoly p = lin({1, 1, 0}) * lin({1, 1, 1});
  return multipoly_from_json(to_json(p), 3) == p;
}

}  // namespace

bool run_selftest(std::ostream& out, int jobs) {
  const std::vector<std::pair<std::string, std::function<bool()>>> checks = {
      {"restriction example, both strategies", check_example},
      {"restriction vanishes off the Bruhat interval in A3", check_vanishing},
      {"GKM product identity in A3", check_gkm_identity},
      {"support independent of the reduced word in A3", check_support_word_independence},
      {"class keys agree with equivalence, type A ranks <= 4", check_class_keys},
      {"N_w polynomials agree with counts, k <= 2", check_counting},
      {"gamma polynomials against brute force and lead terms", [jobs] { return check_gamma(jobs); }},
      {"JSON round trip", check_json_round_trip},
  };
  bool all = true;
  for (const auto& [name, fn] : checks) {
    bool ok = false;
    std::string detail;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      detail = std::string(": ") + e.what();
    }
    out << (ok ? "ok   " : "FAIL ") << name << detail << '\n';
    all = all && ok;
  }
  return all;
}

}  // namespace schubert
