#include "schubert/support.hpp"

#include <algorithm>

#include "schubert/errors.hpp"

namespace schubert {

int DecoratedSupport::vertex_count() const {
  int n = 0;
  for (const auto& c : components) n += c.shape.size;
  return n;
}

int DecoratedSupport::typeA_component_count() const {
  return static_cast<int>(std::count_if(components.begin(), components.end(),
                                        [](const SupportComponent& c) { return c.shape.letter == 'A'; }));
}

std::string DecoratedSupport::profile() const {
  if (components.empty()) return "e";
  std::vector<ComponentShape> shapes;
  for (const auto& c : components) shapes.push_back(c.shape);
  std::sort(shapes.begin(), shapes.end());
  std::string out;
  for (const auto& s : shapes) {
    if (!out.empty()) out += '+';
    out += s.name();
  }
  return out;
}

std::int64_t DecoratedSupport::equal_factor_denominator() const {
  std::int64_t d = 1;
  for (const auto& [key, count] : multiplicities) {
    if (key.first[0] != 'A') continue;
    for (int i = 2; i <= count; ++i) d *= i;
  }
  return d;
}

DecoratedSupport dynkin_support(const WeylElement& w, const Word& word) {
  if (!is_reduced_word(w, word)) throw NotReduced("dynkin_support: word " + to_string(word) + " is not reduced");
  std::vector<int> letters(word.begin(), word.end());
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());

  const DynkinDiagram& d = w.diagram();
  DecoratedSupport out;
  for (auto& nodes : connected_components(d.cartan(), letters)) {
    SupportComponent comp;
    comp.shape = classify_component(d.cartan(), nodes, d.family());
    for (int a : word) {
      auto it = std::find(nodes.begin(), nodes.end(), a);
      if (it == nodes.end()) continue;
      comp.factor_word.push_back(a);
      comp.factor_class.push_back(static_cast<int>(it - nodes.begin()) + 1);
    }
    // Reduce the relabeled factor to its canonical word so equal factors compare equal.
    const DiagramPtr local = make_diagram(d.cartan().submatrix(nodes));
    comp.factor_class = WeylElement::from_word(local, comp.factor_class).canonical_reduced_word();
    comp.vertices = std::move(nodes);
    ++out.multiplicities[{comp.shape.name(), comp.factor_class}];
    out.components.push_back(std::move(comp));
  }
  return out;
}

DecoratedSupport dynkin_support(const WeylElement& w) { return dynkin_support(w, w.canonical_reduced_word()); }

SupportPattern support_pattern(const WeylElement& w) {
  const Word word = w.canonical_reduced_word();
  std::vector<int> vertices(word.begin(), word.end());
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  DiagramPtr local = make_diagram(w.diagram().cartan().submatrix(vertices));
  Word local_word;
  for (int a : word)
    local_word.push_back(static_cast<int>(std::lower_bound(vertices.begin(), vertices.end(), a) - vertices.begin()) + 1);
  WeylElement local_element = WeylElement::from_word(local, local_word);
  return {std::move(local), std::move(vertices), std::move(local_element)};
}

WeylElement transport(const WeylElement& local, std::span<const int> map, const DiagramPtr& target) {
  if (static_cast<int>(map.size()) != local.rank()) throw InvalidArgument("transport: map size does not match the rank");
  Word word = local.canonical_reduced_word();
  for (int& a : word) a = map[static_cast<std::size_t>(a - 1)];
  return WeylElement::from_word(target, word);
}

bool equivalent(const WeylElement& a, const WeylElement& b) {
  if (a.length() != b.length()) return false;
  const SupportPattern pa = support_pattern(a);
  const SupportPattern pb = support_pattern(b);
  if (pa.vertices.size() != pb.vertices.size()) return false;
  bool found = false;
  for_each_embedding(pa.diagram->cartan(), pb.diagram->cartan(), [&](std::span<const int> map) {
    found = transport(pa.local, map, pb.diagram) == pb.local;
    return !found;
  });
  return found;
}

int class_rank(Family family, int k) { return std::max(2 * k, family_min_rank(family)); }

ClassRep canonical_class_rep(const WeylElement& w) {
  const auto& family = w.diagram().family();
  if (!family) throw InvalidArgument("canonical_class_rep: element of a non-classical diagram");
  const DiagramPtr target = build_diagram(*family, class_rank(*family, w.length()));
  const SupportPattern p = support_pattern(w);
  std::optional<WeylElement> best;
  Word best_word;
  for_each_embedding(p.diagram->cartan(), target->cartan(), [&](std::span<const int> map) {
    WeylElement image = transport(p.local, map, target);
    Word word = image.canonical_reduced_word();
    if (!best || word < best_word) {
      best = std::move(image);
      best_word = std::move(word);
    }
    return true;
  });
  if (!best) throw ConsistencyError("canonical_class_rep: support does not embed into the class-rank diagram");
  std::string key(1, family_letter(*family));
  key += ':';
  key += best_word.empty() ? "e" : to_string(best_word);
  return {std::move(*best), std::move(key)};
}

std::int64_t automorphism_count(const WeylElement& w) {
  const SupportPattern p = support_pattern(w);
  std::int64_t count = 0;
  for_each_embedding(p.diagram->cartan(), p.diagram->cartan(), [&](std::span<const int> map) {
    if (transport(p.local, map, p.diagram) == p.local) ++count;
    return true;
  });
  return count;
}

std::int64_t component_automorphism_product(const WeylElement& w) {
  const DecoratedSupport s = dynkin_support(w);
  const CartanMatrix& c = w.diagram().cartan();
  std::int64_t product = 1;
  for (const auto& comp : s.components) {
    const CartanMatrix sub = c.submatrix(comp.vertices);
    product *= count_embeddings(sub, sub);
  }
  return product;
}

}  // namespace schubert
