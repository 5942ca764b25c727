#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

enum class Family { A, B, C, D };

char family_letter(Family f);
Family parse_family(std::string_view text);
/// Smallest rank build_diagram accepts for the family.
int family_min_rank(Family f);

/// Coefficients of a root in the simple-root basis; coords[i] multiplies
/// alpha_{i+1}.
struct RootVector {
  std::vector<int> coords;

  bool is_zero() const;
  bool is_positive() const;  // nonzero, all coordinates >= 0
  bool is_negative() const;  // nonzero, all coordinates <= 0
  RootVector operator-() const;
  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;

  static RootVector simple(int rank, int i);
};

/// Square integer matrix with generalized-Cartan conventions:
/// entry(i, j) = <alpha_i^vee, alpha_j>, so s_i(alpha_j) = alpha_j - entry(i, j) alpha_i.
/// Node indices are 1-based throughout the public interface.
class CartanMatrix {
 public:
  CartanMatrix() = default;
  explicit CartanMatrix(int rank);

  int rank() const { return rank_; }
  int operator()(int i, int j) const { return data_[index(i, j)]; }
  void set(int i, int j, int value) { data_[index(i, j)] = value; }

  /// Principal submatrix on the given (1-based) nodes, in the given order.
  CartanMatrix submatrix(const std::vector<int>& nodes) const;
  /// Block-diagonal union.
  static CartanMatrix disjoint_union(const CartanMatrix& a, const CartanMatrix& b);

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>((i - 1) * rank_ + (j - 1));
  }
  int rank_ = 0;
  std::vector<int> data_;
};

/// A Dynkin diagram: either one of the classical families at a given rank,
/// or an arbitrary finite-type diagram given by its Cartan matrix (used for
/// Dynkin supports and the parabolic subgroups they generate).
class DynkinDiagram {
 public:
  /// Classical diagram with Bourbaki numbering. A needs rank >= 1, B and C
  /// rank >= 2, D rank >= 2 (D_2 = A_1 + A_1 and D_3 = A_3 as graphs).
  static DynkinDiagram classical(Family family, int rank);
  static DynkinDiagram from_cartan(CartanMatrix cartan);

  int rank() const { return cartan_.rank(); }
  const std::optional<Family>& family() const { return family_; }
  const CartanMatrix& cartan() const { return cartan_; }
  int cartan(int i, int j) const { return cartan_(i, j); }

  bool adjacent(int i, int j) const { return i != j && cartan_(i, j) != 0; }
  std::vector<int> neighbors(int i) const;

  /// "A3", "D5"; for non-classical diagrams a serialization of the matrix.
  std::string name() const;

  RootVector reflect(int i, const RootVector& r) const;
  /// Positive roots, sorted by height then lexicographically.
  const std::vector<RootVector>& positive_roots() const { return positive_roots_; }

  friend bool operator==(const DynkinDiagram& a, const DynkinDiagram& b) {
    return a.family_ == b.family_ && a.cartan_ == b.cartan_;
  }

 private:
  DynkinDiagram(std::optional<Family> family, CartanMatrix cartan);
  void check_index(int i) const;

  std::optional<Family> family_;
  CartanMatrix cartan_;
  std::vector<RootVector> positive_roots_;
};

using DiagramPtr = std::shared_ptr<const DynkinDiagram>;

DiagramPtr build_diagram(Family family, int rank);
DiagramPtr make_diagram(CartanMatrix cartan);
/// Parses "A3", "d5", "B2".
DiagramPtr parse_diagram(std::string_view text);

inline RootVector reflect_root(const DynkinDiagram& d, int i, const RootVector& r) {
  return d.reflect(i, r);
}
inline const std::vector<RootVector>& positive_roots(const DynkinDiagram& d) {
  return d.positive_roots();
}

std::string to_string(const RootVector& r);

}  // namespace schubert
