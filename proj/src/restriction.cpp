#include "schubert/restriction.hpp"

#include <bit>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

void require_reduced(const WeylElement& w, const Word& word) {
  if (!is_reduced_word(w, word)) throw NotReduced("word " + to_string(word) + " is not a reduced word for the element");
}

// Left-to-right DP over positions. State: the product u of the letters taken
// so far (always reduced) -> sum over such subwords of prod r(j).
ElementMap<MultiPoly> subword_dp(const WeylElement& w, const Word& word, const WeylElement* target) {
  const auto roots = inversion_roots(w, word);
  const int n = w.rank();
  ElementMap<MultiPoly> states;
  states.emplace(WeylElement::identity(w.diagram_ptr()), MultiPoly::constant(n, 1));
  for (std::size_t j = 0; j < word.size(); ++j) {
    const int letter = word[j];
    const MultiPoly factor = MultiPoly::linear(roots[j]);
    std::vector<std::pair<WeylElement, MultiPoly>> moves;
    for (const auto& [u, poly] : states) {
      if (u.is_right_descent(letter)) continue;  // u s would not be reduced
      WeylElement next = u.times_simple(letter);
      if (target) {
        // Keep only prefixes of reduced words of the target.
        if (next.length() > target->length()) continue;
        if ((next.inverse() * *target).length() != target->length() - next.length()) continue;
      }
      moves.emplace_back(std::move(next), poly * factor);
    }
    for (auto& [u, poly] : moves) {
      auto [it, inserted] = states.try_emplace(std::move(u), poly);
      if (!inserted) it->second += poly;
    }
  }
  return states;
}

}  // namespace

std::vector<RootVector> inversion_roots(const WeylElement& w, const Word& word) {
  require_reduced(w, word);
  std::vector<RootVector> out;
  out.reserve(word.size());
  WeylElement prefix = WeylElement::identity(w.diagram_ptr());
  for (int letter : word) {
    RootVector r = prefix.image_of_simple(letter);
    if (!r.is_positive()) throw ConsistencyError("prefix-transported root is not positive");
    out.push_back(std::move(r));
    prefix = prefix.times_simple(letter);
  }
  return out;
}

MultiPoly restrict(const WeylElement& v, const WeylElement& w, const Word& word) {
  if (!v.same_group(w)) throw DiagramMismatch("restrict: elements of different Weyl groups");
  if (v.length() > w.length()) return MultiPoly(w.rank());
  auto states = subword_dp(w, word, &v);
  auto it = states.find(v);
  return it == states.end() ? MultiPoly(w.rank()) : it->second;
}

MultiPoly restrict(const WeylElement& v, const WeylElement& w) {
  if (!v.same_group(w)) throw DiagramMismatch("restrict: elements of different Weyl groups");
  return restrict(v, w, w.canonical_reduced_word());
}

ElementMap<MultiPoly> restrict_all(const WeylElement& w) {
  return subword_dp(w, w.canonical_reduced_word(), nullptr);
}

MultiPoly restrict_direct(const WeylElement& v, const WeylElement& w, const Word& word) {
  if (!v.same_group(w)) throw DiagramMismatch("restrict_direct: elements of different Weyl groups");
  require_reduced(w, word);
  const DynkinDiagram& d = w.diagram();
  const int n = w.rank();
  const std::size_t len = word.size();
  MultiPoly total(n);
  if (len >= 63) throw InvalidArgument("restrict_direct: word too long for subset enumeration");

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
    if (std::popcount(mask) != v.length()) continue;
    Word sub;
    for (std::size_t i = 0; i < len; ++i)
      if (mask >> i & 1u) sub.push_back(word[i]);
    if (!(WeylElement::from_word(w.diagram_ptr(), sub) == v)) continue;  // reduced by the length match
    MultiPoly f = MultiPoly::constant(n, 1);
    for (std::size_t i = len; i-- > 0;) {
      f = apply_reflection(d, word[i], f);
      if (mask >> i & 1u) f = MultiPoly::variable(n, word[i]) * f;
    }
    total += f;
  }
  return total;
}

}  // namespace schubert
