#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "schubert/subdiagram.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

struct SupportComponent {
  ComponentShape shape;
  std::vector<int> vertices;  // ambient nodes, sorted
  Word factor_word;           // letters of the canonical word lying in this component
  Word factor_class;          // factor_word relabeled onto 1..size by vertex order
};

/// Dynkin support of an element with its factorization into commuting
/// component factors.
struct DecoratedSupport {
  std::vector<SupportComponent> components;  // ordered by smallest vertex
  /// (shape name, factor class) -> number of components carrying that factor.
  std::map<std::pair<std::string, Word>, int> multiplicities;

  int vertex_count() const;
  int component_count() const { return static_cast<int>(components.size()); }
  int typeA_component_count() const;
  /// "A1+A1+A2" style, shapes sorted; "e" for the empty support.
  std::string profile() const;
  /// Product of factorials of the multiplicities of equal type-A factors.
  std::int64_t equal_factor_denominator() const;
};

DecoratedSupport dynkin_support(const WeylElement& w);
/// Same, read off an arbitrary reduced word of w.
DecoratedSupport dynkin_support(const WeylElement& w, const Word& reduced_word);

/// The support as a standalone diagram: local node i is ambient node
/// vertices[i-1], and `local` is w rewritten in the parabolic subgroup.
struct SupportPattern {
  DiagramPtr diagram;
  std::vector<int> vertices;
  WeylElement local;
};

SupportPattern support_pattern(const WeylElement& w);

/// Pushes a local element along map (map[i-1] = image of local node i).
WeylElement transport(const WeylElement& local, std::span<const int> map, const DiagramPtr& target);

bool equivalent(const WeylElement& a, const WeylElement& b);

struct ClassRep {
  WeylElement element;
  std::string key;  // "A:1,3", "B:e"
};

/// Rank used for class representatives of length k: max(2k, minimum rank).
int class_rank(Family family, int k);
/// Equivalent element of the rank class_rank(family, l(w)) group with the
/// lexicographically smallest canonical word.
ClassRep canonical_class_rep(const WeylElement& w);

/// Automorphisms of the support diagram that fix w.
std::int64_t automorphism_count(const WeylElement& w);
/// Product over the components of the size of each one's automorphism group.
std::int64_t component_automorphism_product(const WeylElement& w);

}  // namespace schubert
