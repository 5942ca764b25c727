#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schubert/constants.hpp"
#include "schubert/polyring.hpp"
#include "schubert/rootsys.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

struct GammaOptions {
  int jobs = 1;
  ConstantCache* cache = nullptr;
};

struct ClassEntry {
  std::string key;
  WeylElement rep;
  int length = 0;
  std::string profile;
  std::int64_t members = 0;  // elements of the class-rank group in this class
  std::int64_t inner_sum = 0;
  UniPolyQ nw;               // N_w(n), with its own threshold
  std::int64_t automorphisms = 1;
};

struct GammaResult {
  Family family = Family::A;
  int k = 0;
  UniPolyQ polynomial;
  std::vector<ClassEntry> classes;  // sorted by key
};

/// k-1 in type A, k in B and C, k+1 in D (never below 0).
int gamma_threshold(Family family, int k);

/// Classes of length-k elements of the rank class_rank(family, k) group,
/// with per-class inner sums (computed in the support's parabolic subgroup)
/// and counting polynomials. No polynomial is assembled.
std::vector<ClassEntry> length_classes(Family family, int k, const GammaOptions& opts = {});

/// gamma_k(n) = sum over classes of inner_sum * N_w(n).
GammaResult gamma_polynomial(Family family, int k, const GammaOptions& opts = {});

/// Direct sum of ordinary constants over the length-k sphere of W_n.
std::int64_t gamma_bruteforce(Family family, int k, int n, const GammaOptions& opts = {});

struct LeadTerm {
  int degree = -1;
  Rational coeff;
  std::string witness_key;  // the class supported on k disjoint A1's
  std::int64_t witness_inner_sum = 0;
  int witness_degree = -1;
};

LeadTerm lead_term(const GammaResult& result);
LeadTerm lead_term(Family family, int k, const GammaOptions& opts = {});

}  // namespace schubert
