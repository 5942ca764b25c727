#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "schubert/rootsys.hpp"

namespace schubert {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exponent vector; entry i is the power of alpha_{i+1}.
using Exponent = std::vector<int>;

/// Sparse polynomial with int64 coefficients in alpha_1..alpha_nvars.
/// Zero coefficients are never stored. Arithmetic throws ConsistencyError on
/// int64 overflow instead of wrapping.
class MultiPoly {
 public:
  using Terms = std::map<Exponent, std::int64_t>;

  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, std::int64_t c);
  /// alpha_i, 1-based.
  static MultiPoly variable(int nvars, int i);
  /// The linear form sum_j r_j alpha_j.
  static MultiPoly linear(const RootVector& r);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::int64_t constant_term() const;
  std::int64_t coefficient(const Exponent& e) const;

  /// Total degree of every term when they agree; nullopt for zero or
  /// inhomogeneous polynomials.
  std::optional<int> homogeneous_degree() const;

  void add_term(const Exponent& e, std::int64_t c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(std::int64_t c);
  MultiPoly operator-() const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, std::int64_t c) { return a *= c; }

  /// Renames alpha_i to alpha_{var_map[i-1]} in a ring with new_nvars variables.
  MultiPoly relabel(const std::vector<int>& var_map, int new_nvars) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const MultiPoly& o) const;

  int nvars_ = 0;
  Terms terms_;
};

/// Ring automorphism induced by s_i: alpha_j -> s_i(alpha_j).
MultiPoly apply_reflection(const DynkinDiagram& d, int i, const MultiPoly& p);

/// r with p = q * r. Throws NonExactDivision when q does not divide p.
MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& q);

/// Human rendering, e.g. "α_1^2 + 2α_1α_2"; ascii=true writes "a1^2 + 2*a1*a2".
std::string to_string(const MultiPoly& p, bool ascii = false);

/// Univariate polynomial in n with exact rational coefficients, together with
/// the smallest n from which it is claimed to be valid.
class UniPolyQ {
 public:
  UniPolyQ() = default;
  UniPolyQ(std::vector<Rational> coeffs, int threshold);
  static UniPolyQ constant(const Rational& c, int threshold = 0);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int d) const;
  Rational lead() const;
  int threshold() const { return threshold_; }
  UniPolyQ with_threshold(int t) const;

  Rational operator()(const Rational& n) const;
  Rational evaluate(long long n) const { return (*this)(Rational(n)); }

  UniPolyQ& operator+=(const UniPolyQ& o);
  friend UniPolyQ operator+(UniPolyQ a, const UniPolyQ& b) { return a += b; }
  friend UniPolyQ operator*(const UniPolyQ& a, const UniPolyQ& b);
  friend UniPolyQ operator*(UniPolyQ a, const Rational& c);

  /// Compares coefficients only.
  bool same_polynomial(const UniPolyQ& o) const { return coeffs_ == o.coeffs_; }
  friend bool operator==(const UniPolyQ& a, const UniPolyQ& b) {
    return a.threshold_ == b.threshold_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::vector<Rational> coeffs_;
  int threshold_ = 0;
};

struct Sample {
  long long x;
  Rational y;
};

/// Newton interpolation through all samples. With a degree bound, more
/// samples than bound+1 act as a consistency check: the fit must have degree
/// at most the bound. Threshold of the result is the smallest sample point.
UniPolyQ interpolate(std::span<const Sample> samples, std::optional<int> degree_bound = std::nullopt);

std::string to_string(const UniPolyQ& p, const std::string& var = "n");
std::string to_string(const Rational& q);

}  // namespace schubert
