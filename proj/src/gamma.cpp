#include "schubert/gamma.hpp"

#include <map>
#include <memory>

#include "schubert/counting.hpp"
#include "schubert/errors.hpp"
#include "schubert/parallel.hpp"
#include "schubert/support.hpp"

namespace schubert {

int gamma_threshold(Family family, int k) {
  int t = k;
  if (family == Family::A) t = k - 1;
  if (family == Family::D) t = k + 1;
  return std::max(t, 0);
}

namespace {

std::vector<std::unique_ptr<StructureConstants>> make_workers(const GammaOptions& opts) {
  std::vector<std::unique_ptr<StructureConstants>> workers;
  for (int i = 0; i < std::max(opts.jobs, 1); ++i) workers.push_back(std::make_unique<StructureConstants>(opts.cache));
  return workers;
}

std::string a1_profile(int k) {
  if (k == 0) return "e";
  std::string out;
  for (int i = 0; i < k; ++i) out += i == 0 ? "A1" : "+A1";
  return out;
}

}  // namespace

std::vector<ClassEntry> length_classes(Family family, int k, const GammaOptions& opts) {
  if (k < 0) throw InvalidArgument("k must be nonnegative");
  const DiagramPtr d = build_diagram(family, class_rank(family, k));
  std::map<std::string, ClassEntry> by_key;
  for (const WeylElement& w : length_sphere(d, k)) {
    ClassRep rep = canonical_class_rep(w);
    auto [it, inserted] = by_key.try_emplace(rep.key, ClassEntry{rep.key, rep.element, k, "", 0, 0, {}, 1});
    ++it->second.members;
  }
  std::vector<ClassEntry> classes;
  for (auto& [key, entry] : by_key) classes.push_back(std::move(entry));

  auto workers = make_workers(opts);
  parallel_for(classes.size(), opts.jobs, [&](std::size_t i, int worker) {
    ClassEntry& c = classes[i];
    c.profile = dynkin_support(c.rep).profile();
    c.inner_sum = workers[static_cast<std::size_t>(worker)]->inner_sum(support_pattern(c.rep).local);
    c.nw = N_w_polynomial(c.rep);
    c.automorphisms = automorphism_count(c.rep);
  });
  return classes;
}

GammaResult gamma_polynomial(Family family, int k, const GammaOptions& opts) {
  GammaResult result;
  result.family = family;
  result.k = k;
  result.classes = length_classes(family, k, opts);
  UniPolyQ total;
  for (const auto& c : result.classes) total += c.nw * Rational(c.inner_sum);
  result.polynomial = total.with_threshold(gamma_threshold(family, k));
  return result;
}

std::int64_t gamma_bruteforce(Family family, int k, int n, const GammaOptions& opts) {
  if (k < 0) throw InvalidArgument("k must be nonnegative");
  const DiagramPtr d = build_diagram(family, n);
  const std::vector<WeylElement> sphere = length_sphere(d, k);
  std::vector<std::int64_t> sums(sphere.size(), 0);
  auto workers = make_workers(opts);
  parallel_for(sphere.size(), opts.jobs, [&](std::size_t i, int worker) {
    sums[i] = workers[static_cast<std::size_t>(worker)]->inner_sum(sphere[i]);
  });
  std::int64_t total = 0;
  for (auto s : sums) total += s;
  return total;
}

LeadTerm lead_term(const GammaResult& result) {
  LeadTerm lt;
  lt.degree = result.polynomial.degree();
  lt.coeff = result.polynomial.lead();
  const std::string witness = a1_profile(result.k);
  for (const auto& c : result.classes) {
    if (c.profile != witness) continue;
    if (!lt.witness_key.empty()) throw ConsistencyError("two classes supported on " + witness);
    lt.witness_key = c.key;
    lt.witness_inner_sum = c.inner_sum;
    lt.witness_degree = c.nw.degree();
  }
  return lt;
}

LeadTerm lead_term(Family family, int k, const GammaOptions& opts) { return lead_term(gamma_polynomial(family, k, opts)); }

}  // namespace schubert
