#include "schubert/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw ConsistencyError("polynomial coefficient overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw ConsistencyError("polynomial coefficient overflow");
  return out;
}

int total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

MultiPoly MultiPoly::constant(int nvars, std::int64_t c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw InvalidArgument("variable index out of range");
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  MultiPoly p(nvars);
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::linear(const RootVector& r) {
  const int n = static_cast<int>(r.coords.size());
  MultiPoly p(n);
  for (int i = 1; i <= n; ++i) {
    const int c = r.coords[static_cast<std::size_t>(i - 1)];
    if (c == 0) continue;
    Exponent e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    p.add_term(e, c);
  }
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
}

std::int64_t MultiPoly::constant_term() const {
  return coefficient(Exponent(static_cast<std::size_t>(nvars_), 0));
}

std::int64_t MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

std::optional<int> MultiPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = total(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total(e) != d) return std::nullopt;
  return d;
}

void MultiPoly::add_term(const Exponent& e, std::int64_t c) {
  if (static_cast<int>(e.size()) != nvars_) throw InvalidArgument("exponent length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw InvalidArgument("polynomials live in rings with different variable counts");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

MultiPoly& MultiPoly::operator*=(std::int64_t c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v = checked_mul(v, c);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  out *= -1;
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.nvars_);
  Exponent e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, checked_mul(ca, cb));
    }
  return out;
}

MultiPoly MultiPoly::relabel(const std::vector<int>& var_map, int new_nvars) const {
  if (static_cast<int>(var_map.size()) != nvars_) throw InvalidArgument("relabel map has wrong length");
  MultiPoly out(new_nvars);
  for (const auto& [e, c] : terms_) {
    Exponent f(static_cast<std::size_t>(new_nvars), 0);
    for (int i = 0; i < nvars_; ++i) {
      const int target = var_map[static_cast<std::size_t>(i)];
      if (e[static_cast<std::size_t>(i)] == 0) continue;
      if (target < 1 || target > new_nvars) throw InvalidArgument("relabel target out of range");
      f[static_cast<std::size_t>(target - 1)] += e[static_cast<std::size_t>(i)];
    }
    out.add_term(f, c);
  }
  return out;
}

MultiPoly apply_reflection(const DynkinDiagram& d, int i, const MultiPoly& p) {
  const int n = d.rank();
  if (p.nvars() != n) throw InvalidArgument("polynomial variable count does not match diagram rank");
  if (i < 1 || i > n) throw InvalidArgument("reflection index out of range");

  // Variables moved by s_i and the images of their powers, built lazily.
  std::vector<int> moved;
  for (int j = 1; j <= n; ++j)
    if (d.cartan(i, j) != 0) moved.push_back(j);
  std::map<int, std::vector<MultiPoly>> powers;
  for (int j : moved)
    powers[j] = {MultiPoly::constant(n, 1),
                 MultiPoly::linear(d.reflect(i, RootVector::simple(n, j)))};
  auto power = [&](int j, int e) -> const MultiPoly& {
    auto& list = powers[j];
    while (static_cast<int>(list.size()) <= e) list.push_back(list.back() * list[1]);
    return list[static_cast<std::size_t>(e)];
  };

  MultiPoly out(n);
  for (const auto& [e, c] : p.terms()) {
    Exponent fixed = e;
    for (int j : moved) fixed[static_cast<std::size_t>(j - 1)] = 0;
    MultiPoly term(n);
    term.add_term(fixed, c);
    for (int j : moved) {
      const int ej = e[static_cast<std::size_t>(j - 1)];
      if (ej > 0) term = term * power(j, ej);
    }
    out += term;
  }
  return out;
}

MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (p.nvars() != q.nvars()) throw InvalidArgument("polynomials live in rings with different variable counts");
  const auto& [lead_q, lead_c] = *q.terms().rbegin();
  MultiPoly remainder = p;
  MultiPoly quotient(p.nvars());
  while (!remainder.is_zero()) {
    const auto& [lead_r, lead_rc] = *remainder.terms().rbegin();
    Exponent diff(lead_r.size());
    for (std::size_t i = 0; i < diff.size(); ++i) {
      diff[i] = lead_r[i] - lead_q[i];
      if (diff[i] < 0) throw NonExactDivision("polynomial division is not exact");
    }
    if (lead_rc % lead_c != 0) throw NonExactDivision("polynomial division is not exact");
    MultiPoly t(p.nvars());
    t.add_term(diff, lead_rc / lead_c);
    quotient += t;
    remainder -= t * q;
  }
  return quotient;
}

std::string to_string(const MultiPoly& p, bool ascii) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest terms first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool is_const = total(e) == 0;
    std::int64_t mag = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    bool wrote = false;
    if (mag != 1 || is_const) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (ascii) {
        if (wrote) os << '*';
        os << 'a' << i + 1;
      } else {
        os << "α_" << i + 1;
      }
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
    first = false;
  }
  return os.str();
}

UniPolyQ::UniPolyQ(std::vector<Rational> coeffs, int threshold)
    : coeffs_(std::move(coeffs)), threshold_(threshold) {
  trim();
}

UniPolyQ UniPolyQ::constant(const Rational& c, int threshold) { return UniPolyQ({c}, threshold); }

void UniPolyQ::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPolyQ::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(d)];
}

Rational UniPolyQ::lead() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

UniPolyQ UniPolyQ::with_threshold(int t) const {
  UniPolyQ out = *this;
  out.threshold_ = t;
  return out;
}

Rational UniPolyQ::operator()(const Rational& n) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

UniPolyQ& UniPolyQ::operator+=(const UniPolyQ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  threshold_ = std::max(threshold_, o.threshold_);
  trim();
  return *this;
}

UniPolyQ operator*(const UniPolyQ& a, const UniPolyQ& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return UniPolyQ({}, std::max(a.threshold_, b.threshold_));
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPolyQ(std::move(out), std::max(a.threshold_, b.threshold_));
}

UniPolyQ operator*(UniPolyQ a, const Rational& c) {
  for (auto& x : a.coeffs_) x *= c;
  a.trim();
  return a;
}

UniPolyQ interpolate(std::span<const Sample> samples, std::optional<int> degree_bound) {
  if (samples.empty()) throw InvalidArgument("interpolation needs at least one sample");
  std::set<long long> xs;
  for (const auto& s : samples)
    if (!xs.insert(s.x).second) throw InvalidArgument("duplicate interpolation point " + std::to_string(s.x));

  // Newton divided differences, then expand the Newton form.
  const std::size_t m = samples.size();
  std::vector<Rational> dd(m);
  for (std::size_t i = 0; i < m; ++i) dd[i] = samples[i].y;
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rational(samples[i].x - samples[i - level].x);

  std::vector<Rational> coeffs{dd[m - 1]};
  for (std::size_t idx = m - 1; idx-- > 0;) {
    // coeffs <- coeffs * (n - x_idx) + dd[idx]
    std::vector<Rational> next(coeffs.size() + 1);
    const Rational x(samples[idx].x);
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
      next[d + 1] += coeffs[d];
      next[d] -= coeffs[d] * x;
    }
    next[0] += dd[idx];
    coeffs = std::move(next);
  }
  UniPolyQ out(std::move(coeffs), static_cast<int>(*xs.begin()));
  if (degree_bound && out.degree() > *degree_bound)
    throw ConsistencyError("samples are inconsistent with degree bound " + std::to_string(*degree_bound));
  return out;
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << '/' << denominator(q);
  return os.str();
}

std::string to_string(const UniPolyQ& p, const std::string& var) {
  if (p.degree() < 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    const Rational c = p.coeff(d);
    if (c == 0) continue;
    const Rational mag = c < 0 ? Rational(-c) : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    if (d == 0)
      os << to_string(mag);
    else if (denominator(mag) != 1)
      os << '(' << to_string(mag) << ')';
    else if (mag != 1)
      os << to_string(mag);
    if (d >= 1) os << var;
    if (d >= 2) os << '^' << d;
    first = false;
  }
  return os.str();
}

}  // namespace schubert
