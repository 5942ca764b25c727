#pragma once

#include <cstdint>
#include <vector>

#include "schubert/polyring.hpp"
#include "schubert/subdiagram.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

/// Number of embeddings (induced, bond-preserving vertex maps) of the
/// pattern into the ambient diagram.
std::int64_t enumerate_embeddings(const CartanMatrix& pattern, const DynkinDiagram& ambient);
std::vector<std::vector<int>> list_embeddings(const CartanMatrix& pattern, const DynkinDiagram& ambient);

/// Embeddings up to the automorphisms of each component separately: the
/// number of ways to place the labeled components in their standard
/// orientation.
std::int64_t placement_count(const CartanMatrix& pattern, const DynkinDiagram& ambient);

/// Falling factorial (k+1-k')(k-k')...(k+2-k'-c) for type-A components of
/// the given sizes placed into A_k; k' is the total size, c the count.
std::int64_t typeA_embedding_count(const std::vector<int>& sizes, int k);
/// Same, reading the sizes off a pattern whose components must all be type A.
std::int64_t typeA_embedding_count(const CartanMatrix& pattern, int k);

/// |{v in W_n : v ~ w}| where W_n is the group of w's family at rank n.
std::int64_t N_w_count(const WeylElement& w, int n);
/// embeddings / automorphism_count(w): the same number, computed differently.
std::int64_t N_w_count_by_stabilizer(const WeylElement& w, int n);

/// Rank from which N_w(n) is polynomial: n'-1 in type A, n' in B and C and
/// n'+1 in D, n' being the number of support vertices (never below 0).
int N_w_threshold(const WeylElement& w);
/// Exact eventual polynomial, interpolated from N_w_count samples starting
/// at max(threshold, minimum rank).
UniPolyQ N_w_polynomial(const WeylElement& w);

}  // namespace schubert
