#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "schubert/rootsys.hpp"

namespace schubert {

/// Sequence of 1-based simple-reflection indices.
using Word = std::vector<int>;

/// A Weyl group element stored as its integer matrix on the simple-root
/// basis: column j holds the coordinates of w(alpha_j).
///
/// Composition follows matrix multiplication, so from_word({a, b}) is
/// s_a * s_b and applies s_b to a root first.
class WeylElement {
 public:
  static WeylElement identity(DiagramPtr diagram);
  static WeylElement from_word(DiagramPtr diagram, const Word& word);

  const DynkinDiagram& diagram() const { return *diagram_; }
  const DiagramPtr& diagram_ptr() const { return diagram_; }
  int rank() const { return diagram_->rank(); }

  /// Matrix entry, 1-based.
  int entry(int row, int col) const {
    return matrix_[static_cast<std::size_t>((row - 1) * rank() + (col - 1))];
  }
  RootVector apply(const RootVector& r) const;
  /// w(alpha_j).
  RootVector image_of_simple(int j) const;

  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }
  /// l(w s_i) < l(w), equivalently w(alpha_i) is negative.
  bool is_right_descent(int i) const;

  /// w * s_i and s_i * w.
  WeylElement times_simple(int i) const;
  WeylElement simple_times(int i) const;
  WeylElement operator*(const WeylElement& other) const;
  WeylElement inverse() const;

  /// Smallest right descent peeled repeatedly, then reversed.
  Word canonical_reduced_word() const;

  std::size_t hash() const;
  bool same_group(const WeylElement& other) const;
  friend bool operator==(const WeylElement& a, const WeylElement& b);

 private:
  WeylElement(DiagramPtr diagram, std::vector<int> matrix, int length)
      : diagram_(std::move(diagram)), matrix_(std::move(matrix)), length_(length) {}
  static int count_inversions(const DynkinDiagram& d, const std::vector<int>& matrix);

  DiagramPtr diagram_;
  std::vector<int> matrix_;
  int length_ = 0;
};

struct ElementHash {
  std::size_t operator()(const WeylElement& w) const { return w.hash(); }
};
using ElementSet = std::unordered_set<WeylElement, ElementHash>;
template <class T>
using ElementMap = std::unordered_map<WeylElement, T, ElementHash>;

/// Deterministic total order: by length, then canonical reduced word.
bool canonical_less(const WeylElement& a, const WeylElement& b);
std::vector<WeylElement> sorted(const ElementSet& set);

inline WeylElement from_word(DiagramPtr d, const Word& word) { return WeylElement::from_word(std::move(d), word); }
inline int length(const WeylElement& w) { return w.length(); }
inline Word canonical_reduced_word(const WeylElement& w) { return w.canonical_reduced_word(); }

bool is_reduced_word(const WeylElement& w, const Word& word);

/// Subword-property test seeded by the canonical reduced word of w.
bool bruhat_leq(const WeylElement& v, const WeylElement& w);
/// Same DP seeded by an arbitrary reduced word of w.
bool bruhat_leq(const WeylElement& v, const WeylElement& w, const Word& reduced_word_of_w);

/// {y : y <= w}, sorted by canonical_less.
std::vector<WeylElement> lower_interval(const WeylElement& w);
ElementSet lower_interval_set(const WeylElement& w, const Word& reduced_word_of_w);

/// Elements of length exactly k, sorted by canonical_less.
std::vector<WeylElement> length_sphere(const DiagramPtr& d, int k);
/// Every element of the group. Only sensible for small ranks.
std::vector<WeylElement> all_elements(const DiagramPtr& d);

/// Every reduced word of w, in lexicographic order.
std::vector<Word> all_reduced_words(const WeylElement& w);

/// Type-A one-line notation on rank+1 letters: the permutation
/// s_{a_1} o ... o s_{a_m} as a composite of functions.
std::vector<int> to_permutation(const WeylElement& w);
WeylElement from_permutation(const DiagramPtr& d, const std::vector<int>& one_line);

/// Element grammar: "1,2,3,1"; "" / "e" / "id" for the identity; in type A a
/// digit string of length rank+1 that is a permutation is read as one-line
/// notation, e.g. "3241".
WeylElement parse_element(const DiagramPtr& d, std::string_view text);
Word parse_word(std::string_view text);

std::string to_string(const Word& word);

}  // namespace schubert
