#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schubert/rootsys.hpp"

namespace schubert {

/// Connected components of the graph underlying a Cartan matrix, each a
/// sorted list of 1-based nodes; components ordered by smallest node.
std::vector<std::vector<int>> connected_components(const CartanMatrix& c);
std::vector<std::vector<int>> connected_components(const CartanMatrix& c, const std::vector<int>& nodes);

/// Isomorphism type of a connected finite-type diagram.
struct ComponentShape {
  char letter = 'A';  // A, B, C or D
  int size = 0;
  std::string name() const { return std::string(1, letter) + std::to_string(size); }
  friend bool operator==(const ComponentShape&, const ComponentShape&) = default;
  friend auto operator<=>(const ComponentShape&, const ComponentShape&) = default;
};

/// Classifies the connected subdiagram on `nodes`. A path of simple bonds is
/// A, a vertex of degree 3 makes D (>= 4 nodes), a double bond makes B when
/// the short root sits at the end of the path and C otherwise. B2 and C2 are
/// the same diagram; `hint` picks the letter.
ComponentShape classify_component(const CartanMatrix& c, const std::vector<int>& nodes,
                                  std::optional<Family> hint = std::nullopt);

/// Standard diagram of a shape (B and C of size 1 degenerate to A1).
CartanMatrix standard_cartan(const ComponentShape& shape);

/// Visits every injective map phi from pattern nodes to target nodes with
/// target(phi(i), phi(j)) == pattern(i, j) for all i != j, so bonds (with
/// their direction) are preserved and non-bonds are reflected. map[i-1] is
/// phi(i). The visitor returns false to stop early.
void for_each_embedding(const CartanMatrix& pattern, const CartanMatrix& target,
                        const std::function<bool(std::span<const int>)>& visit);

std::int64_t count_embeddings(const CartanMatrix& pattern, const CartanMatrix& target);

/// Isomorphisms a -> b (empty when the ranks differ).
std::vector<std::vector<int>> isomorphisms(const CartanMatrix& a, const CartanMatrix& b);

/// Builds the block-diagonal pattern for a profile such as "A1+A2" or "B2+A1".
CartanMatrix parse_profile(std::string_view profile);

}  // namespace schubert
