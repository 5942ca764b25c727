#include "schubert/counting.hpp"

#include <algorithm>
#include <numeric>

#include "schubert/errors.hpp"
#include "schubert/support.hpp"

namespace schubert {

std::int64_t enumerate_embeddings(const CartanMatrix& pattern, const DynkinDiagram& ambient) {
  return count_embeddings(pattern, ambient.cartan());
}

std::vector<std::vector<int>> list_embeddings(const CartanMatrix& pattern, const DynkinDiagram& ambient) {
  std::vector<std::vector<int>> out;
  for_each_embedding(pattern, ambient.cartan(), [&](std::span<const int> m) {
    out.emplace_back(m.begin(), m.end());
    return true;
  });
  return out;
}

std::int64_t placement_count(const CartanMatrix& pattern, const DynkinDiagram& ambient) {
  std::int64_t aut = 1;
  for (const auto& comp : connected_components(pattern)) {
    const CartanMatrix sub = pattern.submatrix(comp);
    aut *= count_embeddings(sub, sub);
  }
  return enumerate_embeddings(pattern, ambient) / aut;
}

std::int64_t typeA_embedding_count(const std::vector<int>& sizes, int k) {
  const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
  const int c = static_cast<int>(sizes.size());
  if (std::any_of(sizes.begin(), sizes.end(), [](int s) { return s < 1; }))
    throw InvalidArgument("typeA_embedding_count: component sizes must be positive");
  if (k < total - 1) throw InvalidArgument("typeA_embedding_count: need k >= k' - 1");
  std::int64_t out = 1;
  for (int i = 0; i < c; ++i) {
    const int factor = k + 1 - total - i;
    if (factor <= 0) return 0;
    out *= factor;
  }
  return out;
}

std::int64_t typeA_embedding_count(const CartanMatrix& pattern, int k) {
  std::vector<int> sizes;
  for (const auto& comp : connected_components(pattern)) {
    const ComponentShape shape = classify_component(pattern, comp);
    if (shape.letter != 'A') throw InvalidArgument("typeA_embedding_count: component " + shape.name() + " is not type A");
    sizes.push_back(shape.size);
  }
  return typeA_embedding_count(sizes, k);
}

namespace {

Family family_of(const WeylElement& w) {
  const auto& f = w.diagram().family();
  if (!f) throw InvalidArgument("counting needs an element of a classical diagram");
  return *f;
}

}  // namespace

std::int64_t N_w_count(const WeylElement& w, int n) {
  const DiagramPtr target = build_diagram(family_of(w), n);
  const SupportPattern p = support_pattern(w);
  ElementSet images;
  for_each_embedding(p.diagram->cartan(), target->cartan(), [&](std::span<const int> map) {
    images.insert(transport(p.local, map, target));
    return true;
  });
  return static_cast<std::int64_t>(images.size());
}

std::int64_t N_w_count_by_stabilizer(const WeylElement& w, int n) {
  const DiagramPtr target = build_diagram(family_of(w), n);
  const SupportPattern p = support_pattern(w);
  return enumerate_embeddings(p.diagram->cartan(), *target) / automorphism_count(w);
}

int N_w_threshold(const WeylElement& w) {
  const int vertices = static_cast<int>(support_pattern(w).vertices.size());
  int t = vertices;
  switch (family_of(w)) {
    case Family::A: t = vertices - 1; break;
    case Family::B:
    case Family::C: t = vertices; break;
    case Family::D: t = vertices + 1; break;
  }
  return std::max(t, 0);
}

UniPolyQ N_w_polynomial(const WeylElement& w) {
  const Family f = family_of(w);
  const int threshold = N_w_threshold(w);
  const int start = std::max(threshold, family_min_rank(f));
  const int degree = dynkin_support(w).component_count();
  // One sample beyond what the degree bound needs, so interpolate can
  // confirm the bound instead of trusting it.
  std::vector<Sample> samples;
  for (int n = start; n <= start + degree + 1; ++n) samples.push_back({n, Rational(N_w_count(w, n))});
  return interpolate(samples, degree).with_threshold(threshold);
}

}  // namespace schubert
