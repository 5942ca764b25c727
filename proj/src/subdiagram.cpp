#include "schubert/subdiagram.hpp"

#include <algorithm>
#include <charconv>
#include <queue>

#include "schubert/errors.hpp"

namespace schubert {

std::vector<std::vector<int>> connected_components(const CartanMatrix& c, const std::vector<int>& nodes) {
  std::vector<int> sorted_nodes = nodes;
  std::sort(sorted_nodes.begin(), sorted_nodes.end());
  std::vector<bool> in_set(static_cast<std::size_t>(c.rank() + 1), false);
  for (int v : sorted_nodes) in_set[static_cast<std::size_t>(v)] = true;
  std::vector<bool> seen(in_set.size(), false);
  std::vector<std::vector<int>> out;
  for (int start : sorted_nodes) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(start);
    seen[static_cast<std::size_t>(start)] = true;
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      comp.push_back(x);
      for (int y = 1; y <= c.rank(); ++y) {
        if (y == x || !in_set[static_cast<std::size_t>(y)] || seen[static_cast<std::size_t>(y)] || c(x, y) == 0) continue;
        seen[static_cast<std::size_t>(y)] = true;
        q.push(y);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::vector<int>> connected_components(const CartanMatrix& c) {
  std::vector<int> all(static_cast<std::size_t>(c.rank()));
  for (int i = 0; i < c.rank(); ++i) all[static_cast<std::size_t>(i)] = i + 1;
  return connected_components(c, all);
}

ComponentShape classify_component(const CartanMatrix& c, const std::vector<int>& nodes, std::optional<Family> hint) {
  const int m = static_cast<int>(nodes.size());
  auto degree = [&](int x) {
    int d = 0;
    for (int y : nodes)
      if (y != x && c(x, y) != 0) ++d;
    return d;
  };
  int max_degree = 0;
  for (int x : nodes) max_degree = std::max(max_degree, degree(x));
  for (int x : nodes)
    for (int y : nodes) {
      if (x == y || c(x, y) != -2) continue;
      // Double bond between x and y with <x^vee, y> = -2: x is the short root.
      if (m == 2) return {hint == Family::C ? 'C' : 'B', 2};
      if (degree(x) == 1) return {'B', m};
      return {'C', m};
    }
  if (max_degree >= 3) return {'D', m};
  return {'A', m};
}

CartanMatrix standard_cartan(const ComponentShape& shape) {
  if (shape.size == 1) return CartanMatrix(1);
  Family f = Family::A;
  switch (shape.letter) {
    case 'A': f = Family::A; break;
    case 'B': f = Family::B; break;
    case 'C': f = Family::C; break;
    case 'D': f = Family::D; break;
    default: throw InvalidArgument(std::string("unknown component type ") + shape.letter);
  }
  if (f == Family::D && shape.size < 4) throw InvalidArgument("type D components need at least 4 nodes");
  return DynkinDiagram::classical(f, shape.size).cartan();
}

namespace {

struct Plan {
  std::vector<int> order;   // pattern nodes in placement order
  std::vector<int> anchor;  // an earlier-placed neighbor, or 0 for a component root
};

Plan make_plan(const CartanMatrix& pattern) {
  Plan plan;
  std::vector<bool> placed(static_cast<std::size_t>(pattern.rank() + 1), false);
  for (const auto& comp : connected_components(pattern)) {
    std::queue<std::pair<int, int>> q;
    q.push({comp.front(), 0});
    placed[static_cast<std::size_t>(comp.front())] = true;
    while (!q.empty()) {
      auto [x, from] = q.front();
      q.pop();
      plan.order.push_back(x);
      plan.anchor.push_back(from);
      for (int y : comp) {
        if (placed[static_cast<std::size_t>(y)] || pattern(x, y) == 0) continue;
        placed[static_cast<std::size_t>(y)] = true;
        q.push({y, x});
      }
    }
  }
  return plan;
}

}  // namespace

void for_each_embedding(const CartanMatrix& pattern, const CartanMatrix& target,
                        const std::function<bool(std::span<const int>)>& visit) {
  const int p = pattern.rank();
  const int t = target.rank();
  if (p > t) return;
  const Plan plan = make_plan(pattern);
  std::vector<int> image(static_cast<std::size_t>(p + 1), 0);  // pattern node -> target node
  std::vector<bool> used(static_cast<std::size_t>(t + 1), false);
  std::vector<int> result(static_cast<std::size_t>(p));
  bool stop = false;

  auto consistent = [&](std::size_t depth, int x, int candidate) {
    for (std::size_t k = 0; k < depth; ++k) {
      const int y = plan.order[k];
      const int ty = image[static_cast<std::size_t>(y)];
      if (target(candidate, ty) != pattern(x, y) || target(ty, candidate) != pattern(y, x)) return false;
    }
    return true;
  };

  std::function<void(std::size_t)> place = [&](std::size_t depth) {
    if (stop) return;
    if (depth == plan.order.size()) {
      for (int i = 1; i <= p; ++i) result[static_cast<std::size_t>(i - 1)] = image[static_cast<std::size_t>(i)];
      if (!visit(result)) stop = true;
      return;
    }
    const int x = plan.order[depth];
    const int a = plan.anchor[depth];
    for (int cand = 1; cand <= t && !stop; ++cand) {
      if (used[static_cast<std::size_t>(cand)]) continue;
      if (a != 0 && target(cand, image[static_cast<std::size_t>(a)]) == 0) continue;
      if (!consistent(depth, x, cand)) continue;
      used[static_cast<std::size_t>(cand)] = true;
      image[static_cast<std::size_t>(x)] = cand;
      place(depth + 1);
      used[static_cast<std::size_t>(cand)] = false;
    }
  };
  place(0);
}

std::int64_t count_embeddings(const CartanMatrix& pattern, const CartanMatrix& target) {
  std::int64_t count = 0;
  for_each_embedding(pattern, target, [&](std::span<const int>) {
    ++count;
    return true;
  });
  return count;
}

std::vector<std::vector<int>> isomorphisms(const CartanMatrix& a, const CartanMatrix& b) {
  std::vector<std::vector<int>> out;
  if (a.rank() != b.rank()) return out;
  for_each_embedding(a, b, [&](std::span<const int> m) {
    out.emplace_back(m.begin(), m.end());
    return true;
  });
  return out;
}

CartanMatrix parse_profile(std::string_view profile) {
  CartanMatrix out(0);
  if (profile.empty() || profile == "0" || profile == "empty") return out;
  std::size_t pos = 0;
  while (pos <= profile.size()) {
    const std::size_t plus = profile.find('+', pos);
    const std::string_view token = profile.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos);
    if (token.size() < 2) throw InvalidArgument("bad component '" + std::string(token) + "' in support profile");
    ComponentShape shape{static_cast<char>(std::toupper(static_cast<unsigned char>(token[0]))), 0};
    const auto digits = token.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), shape.size);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || shape.size < 1)
      throw InvalidArgument("bad component '" + std::string(token) + "' in support profile");
    if (shape.letter != 'A' && shape.letter != 'B' && shape.letter != 'C' && shape.letter != 'D')
      throw InvalidArgument("bad component type in '" + std::string(token) + "'");
    out = CartanMatrix::disjoint_union(out, standard_cartan(shape));
    if (plus == std::string_view::npos) break;
    pos = plus + 1;
  }
  return out;
}

}  // namespace schubert
