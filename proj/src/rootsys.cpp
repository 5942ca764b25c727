#include "schubert/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "schubert/errors.hpp"

namespace schubert {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

Family parse_family(std::string_view text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'A': return Family::A;
      case 'B': return Family::B;
      case 'C': return Family::C;
      case 'D': return Family::D;
      default: break;
    }
  }
  throw InvalidArgument("unknown Lie type '" + std::string(text) + "' (expected A, B, C or D)");
}

int family_min_rank(Family f) { return f == Family::A ? 1 : 2; }

bool RootVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

bool RootVector::is_positive() const {
  return !is_zero() && std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

bool RootVector::is_negative() const {
  return !is_zero() && std::all_of(coords.begin(), coords.end(), [](int c) { return c <= 0; });
}

RootVector RootVector::operator-() const {
  RootVector out = *this;
  for (int& c : out.coords) c = -c;
  return out;
}

RootVector RootVector::simple(int rank, int i) {
  RootVector r{std::vector<int>(static_cast<std::size_t>(rank), 0)};
  r.coords.at(static_cast<std::size_t>(i - 1)) = 1;
  return r;
}

CartanMatrix::CartanMatrix(int rank)
    : rank_(rank), data_(static_cast<std::size_t>(rank * rank), 0) {
  for (int i = 1; i <= rank; ++i) set(i, i, 2);
}

CartanMatrix CartanMatrix::submatrix(const std::vector<int>& nodes) const {
  CartanMatrix out(static_cast<int>(nodes.size()));
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = 0; b < nodes.size(); ++b)
      out.set(static_cast<int>(a) + 1, static_cast<int>(b) + 1, (*this)(nodes[a], nodes[b]));
  return out;
}

CartanMatrix CartanMatrix::disjoint_union(const CartanMatrix& a, const CartanMatrix& b) {
  CartanMatrix out(a.rank() + b.rank());
  for (int i = 1; i <= a.rank(); ++i)
    for (int j = 1; j <= a.rank(); ++j) out.set(i, j, a(i, j));
  for (int i = 1; i <= b.rank(); ++i)
    for (int j = 1; j <= b.rank(); ++j) out.set(a.rank() + i, a.rank() + j, b(i, j));
  return out;
}

namespace {

void validate_cartan(const CartanMatrix& c) {
  for (int i = 1; i <= c.rank(); ++i) {
    if (c(i, i) != 2) throw InvalidArgument("Cartan matrix diagonal must be 2");
    for (int j = 1; j <= c.rank(); ++j) {
      if (i == j) continue;
      const int v = c(i, j);
      if (v > 0 || v < -2) throw InvalidArgument("Cartan off-diagonal entries must lie in {0,-1,-2}");
      if ((v == 0) != (c(j, i) == 0)) throw InvalidArgument("Cartan matrix zero pattern must be symmetric");
    }
  }
}

std::vector<RootVector> close_positive_roots(const DynkinDiagram& d) {
  const int n = d.rank();
  std::set<RootVector> seen;
  std::vector<RootVector> frontier;
  for (int i = 1; i <= n; ++i) {
    frontier.push_back(RootVector::simple(n, i));
    seen.insert(frontier.back());
  }
  while (!frontier.empty()) {
    std::vector<RootVector> next;
    for (const auto& r : frontier) {
      for (int i = 1; i <= n; ++i) {
        RootVector s = d.reflect(i, r);
        if (!s.is_positive()) continue;
        if (seen.insert(s).second) next.push_back(std::move(s));
      }
    }
    frontier = std::move(next);
  }
  std::vector<RootVector> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const RootVector& a, const RootVector& b) {
    const int ha = std::accumulate(a.coords.begin(), a.coords.end(), 0);
    const int hb = std::accumulate(b.coords.begin(), b.coords.end(), 0);
    if (ha != hb) return ha < hb;
    return a.coords > b.coords;
  });
  return out;
}

}  // namespace

DynkinDiagram::DynkinDiagram(std::optional<Family> family, CartanMatrix cartan)
    : family_(family), cartan_(std::move(cartan)) {
  validate_cartan(cartan_);
  positive_roots_ = close_positive_roots(*this);
}

DynkinDiagram DynkinDiagram::classical(Family family, int rank) {
  if (rank < family_min_rank(family))
    throw InvalidArgument(std::string("rank ") + std::to_string(rank) + " is invalid for type " +
                          family_letter(family));
  CartanMatrix c(rank);
  auto bond = [&c](int i, int j) {
    c.set(i, j, -1);
    c.set(j, i, -1);
  };
  switch (family) {
    case Family::A:
      for (int i = 1; i < rank; ++i) bond(i, i + 1);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i < rank; ++i) bond(i, i + 1);
      // B_n: alpha_n short, <alpha_n^vee, alpha_{n-1}> = -2. C_n is the transpose.
      if (family == Family::B)
        c.set(rank, rank - 1, -2);
      else
        c.set(rank - 1, rank, -2);
      break;
    case Family::D:
      for (int i = 1; i + 1 <= rank - 2; ++i) bond(i, i + 1);
      if (rank >= 3) {
        bond(rank - 2, rank - 1);
        bond(rank - 2, rank);
      }
      break;
  }
  return DynkinDiagram(family, std::move(c));
}

DynkinDiagram DynkinDiagram::from_cartan(CartanMatrix cartan) {
  return DynkinDiagram(std::nullopt, std::move(cartan));
}

void DynkinDiagram::check_index(int i) const {
  if (i < 1 || i > rank())
    throw InvalidArgument("node index " + std::to_string(i) + " out of range 1.." +
                          std::to_string(rank()) + " for " + name());
}

std::vector<int> DynkinDiagram::neighbors(int i) const {
  check_index(i);
  std::vector<int> out;
  for (int j = 1; j <= rank(); ++j)
    if (adjacent(i, j)) out.push_back(j);
  return out;
}

std::string DynkinDiagram::name() const {
  if (family_) return family_letter(*family_) + std::to_string(rank());
  std::ostringstream os;
  os << "cartan[";
  for (int i = 1; i <= rank(); ++i) {
    if (i > 1) os << ';';
    for (int j = 1; j <= rank(); ++j) {
      if (j > 1) os << ',';
      os << cartan_(i, j);
    }
  }
  os << ']';
  return os.str();
}

RootVector DynkinDiagram::reflect(int i, const RootVector& r) const {
  check_index(i);
  if (static_cast<int>(r.coords.size()) != rank())
    throw InvalidArgument("root vector length does not match diagram rank");
  // s_i(sum_j c_j alpha_j) = sum_j c_j alpha_j - (sum_j c_j cartan(i, j)) alpha_i
  int pairing = 0;
  for (int j = 1; j <= rank(); ++j) pairing += r.coords[static_cast<std::size_t>(j - 1)] * cartan_(i, j);
  RootVector out = r;
  out.coords[static_cast<std::size_t>(i - 1)] -= pairing;
  return out;
}

DiagramPtr build_diagram(Family family, int rank) {
  return std::make_shared<const DynkinDiagram>(DynkinDiagram::classical(family, rank));
}

DiagramPtr make_diagram(CartanMatrix cartan) {
  return std::make_shared<const DynkinDiagram>(DynkinDiagram::from_cartan(std::move(cartan)));
}

DiagramPtr parse_diagram(std::string_view text) {
  if (text.size() < 2) throw InvalidArgument("diagram must be a type letter and a rank, e.g. A3");
  const Family f = parse_family(text.substr(0, 1));
  int rank = 0;
  const auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw InvalidArgument("bad rank in diagram '" + std::string(text) + "'");
  return build_diagram(f, rank);
}

std::string to_string(const RootVector& r) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    const int c = r.coords[i];
    if (c == 0) continue;
    if (c < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    if (c != 1 && c != -1) os << (c < 0 ? -c : c);
    os << "a" << i + 1;
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace schubert
