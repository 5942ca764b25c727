#include "schubert/constants.hpp"

#include <algorithm>
#include <cstdlib>

#include "schubert/errors.hpp"
#include "schubert/json_io.hpp"
#include "schubert/restriction.hpp"

namespace schubert {

ConstantKey ConstantKey::of(const WeylElement& u, const WeylElement& v, const WeylElement& w) {
  if (!u.same_group(w) || !v.same_group(w)) throw DiagramMismatch("structure constant: elements of different Weyl groups");
  ConstantKey key{w.diagram().name(), u.canonical_reduced_word(), v.canonical_reduced_word(), w.canonical_reduced_word()};
  if (std::make_pair(key.v.size(), key.v) < std::make_pair(key.u.size(), key.u)) std::swap(key.u, key.v);
  return key;
}

std::string ConstantKey::str() const {
  return diagram + "|" + to_string(u) + "|" + to_string(v) + "|" + to_string(w);
}

ConstantCache::ConstantCache(std::filesystem::path dir) {
  std::filesystem::create_directories(dir);
  file_ = dir / "constants.jsonl";
  std::ifstream in(file_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const Json rec = Json::parse(line);
      ConstantKey key{rec.at("diagram").get<std::string>(), rec.at("u").get<Word>(), rec.at("v").get<Word>(),
                      rec.at("w").get<Word>()};
      entries_.insert_or_assign(key.str(), multipoly_from_json(rec.at("value"), rec.at("nvars").get<int>()));
    } catch (const std::exception&) {
      // A torn trailing line from an interrupted writer; ignore it.
    }
  }
  bool needs_newline = false;
  if (std::ifstream tail(file_, std::ios::binary | std::ios::ate); tail && tail.tellg() > 0) {
    tail.seekg(-1, std::ios::end);
    needs_newline = tail.get() != '\n';
  }
  out_.open(file_, std::ios::app);
  if (!out_) throw InvalidArgument("cannot open cache file " + file_.string());
  if (needs_newline) out_ << '\n';
}

std::optional<std::filesystem::path> ConstantCache::dir_from_env() {
  const char* env = std::getenv(kEnvVar);
  if (env == nullptr || *env == '\0') return std::nullopt;
  return std::filesystem::path(env);
}

std::optional<MultiPoly> ConstantCache::lookup(const ConstantKey& key) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(key.str());
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ConstantCache::store(const ConstantKey& key, const MultiPoly& value, int nvars) {
  std::unique_lock lock(mutex_);
  if (!entries_.try_emplace(key.str(), value).second) return;
  const Json rec{{"diagram", key.diagram}, {"u", key.u}, {"v", key.v}, {"w", key.w},
                 {"nvars", nvars}, {"value", to_json(value)}};
  out_ << rec.dump() << '\n';
  out_.flush();
}

std::size_t ConstantCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

const ElementMap<MultiPoly>& StructureConstants::restrictions_at(const WeylElement& x) {
  auto it = restrictions_.find(x);
  if (it == restrictions_.end()) it = restrictions_.emplace(x, restrict_all(x)).first;
  return it->second;
}

void StructureConstants::solve(const WeylElement& u, const WeylElement& v, const WeylElement& w) {
  const int n = w.rank();
  const MultiPoly zero(n);
  auto lookup = [&](const ElementMap<MultiPoly>& m, const WeylElement& y) -> const MultiPoly& {
    auto it = m.find(y);
    return it == m.end() ? zero : it->second;
  };

  for (const WeylElement& y : lower_interval(w)) {
    const ConstantKey key = ConstantKey::of(u, v, y);
    const std::string skey = key.str();
    if (constants_.contains(skey)) continue;

    const auto& at_y = restrictions_at(y);
    MultiPoly rhs = lookup(at_y, u) * lookup(at_y, v);
    for (const auto& [lower, xi] : at_y) {
      if (lower == y) continue;
      const auto found = constants_.find(ConstantKey::of(u, v, lower).str());
      if (found == constants_.end())
        throw ConsistencyError("triangular solve reached " + skey + " before a smaller element");
      if (!found->second.is_zero()) rhs -= found->second * xi;
    }
    MultiPoly c(n);
    try {
      c = exact_divide(rhs, lookup(at_y, y));
    } catch (const NonExactDivision&) {
      throw NonExactDivision("GKM solve: non-exact division for C[" + skey + "]");
    }
    if (!c.is_zero()) {
      const auto deg = c.homogeneous_degree();
      if (!deg || *deg != u.length() + v.length() - y.length())
        throw ConsistencyError("GKM solve: C[" + skey + "] is not homogeneous of degree l(u)+l(v)-l(w)");
    }
    if (cache_) cache_->store(key, c, n);
    constants_.emplace(skey, std::move(c));
  }
}

MultiPoly StructureConstants::equivariant(const WeylElement& u, const WeylElement& v, const WeylElement& w) {
  const ConstantKey key = ConstantKey::of(u, v, w);
  const std::string skey = key.str();
  if (auto it = constants_.find(skey); it != constants_.end()) return it->second;
  if (cache_) {
    if (auto hit = cache_->lookup(key)) {
      constants_.emplace(skey, *hit);
      return *hit;
    }
  }
  if (u.length() + v.length() < w.length()) {
    // Negative degree: the constant vanishes. Recorded so lookups stay cheap.
    constants_.emplace(skey, MultiPoly(w.rank()));
    return MultiPoly(w.rank());
  }
  solve(u, v, w);
  return constants_.at(skey);
}

std::int64_t StructureConstants::ordinary(const WeylElement& u, const WeylElement& v, const WeylElement& w) {
  if (!u.same_group(w) || !v.same_group(w)) throw DiagramMismatch("structure constant: elements of different Weyl groups");
  if (u.length() + v.length() != w.length()) return 0;
  const MultiPoly c = equivariant(u, v, w);
  if (!c.is_constant()) throw ConsistencyError("degree-zero structure constant is not a constant polynomial");
  return c.constant_term();
}

std::int64_t StructureConstants::inner_sum(const WeylElement& w) {
  const auto interval = lower_interval(w);
  std::int64_t total = 0;
  for (const auto& u : interval)
    for (const auto& v : interval)
      if (u.length() + v.length() == w.length()) total += ordinary(u, v, w);
  return total;
}

MultiPoly equivariant_constant(const WeylElement& u, const WeylElement& v, const WeylElement& w) {
  return StructureConstants().equivariant(u, v, w);
}

std::int64_t ordinary_constant(const WeylElement& u, const WeylElement& v, const WeylElement& w) {
  return StructureConstants().ordinary(u, v, w);
}

std::int64_t inner_sum(const WeylElement& w) { return StructureConstants().inner_sum(w); }

}  // namespace schubert
