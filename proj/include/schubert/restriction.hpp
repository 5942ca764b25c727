#pragma once

#include <vector>

#include "schubert/polyring.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

/// r(j) = s_{b_1} ... s_{b_{j-1}} (alpha_{b_j}) for the reduced word b of w.
/// Each r(j) is a positive root; together they are the inversions of w^{-1}.
std::vector<RootVector> inversion_roots(const WeylElement& w, const Word& word);

/// Equivariant restriction of the Schubert class of v to the fixed point w,
/// as the sum over reduced subwords for v of the products of the
/// corresponding r(j). Zero unless v <= w; otherwise homogeneous of degree l(v).
MultiPoly restrict(const WeylElement& v, const WeylElement& w);
MultiPoly restrict(const WeylElement& v, const WeylElement& w, const Word& word);

/// Every nonzero restriction at the fixed point w at once: the map
/// y -> xi_{y|w} for all y <= w. One DP pass over the canonical word.
ElementMap<MultiPoly> restrict_all(const WeylElement& w);

/// Literal operator evaluation: sum over reduced subwords J of the product of
/// operators (alpha_{b_i} s_{b_i} if i in J, s_{b_i} otherwise) applied
/// right-to-left to the constant 1. Exponential in l(w); an oracle for restrict.
MultiPoly restrict_direct(const WeylElement& v, const WeylElement& w, const Word& word);

}  // namespace schubert
