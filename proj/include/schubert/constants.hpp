#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "schubert/polyring.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

/// Identifies C_{u,v}^w. u and v are stored in canonical order (the smaller
/// canonical word first) since the constants are symmetric in u and v.
struct ConstantKey {
  std::string diagram;  // DynkinDiagram::name()
  Word u, v, w;

  static ConstantKey of(const WeylElement& u, const WeylElement& v, const WeylElement& w);
  std::string str() const;
};

/// Append-only on-disk store of equivariant constants, one JSON object per
/// line in <dir>/constants.jsonl. Reads are concurrent, writes serialized.
/// Deleting the directory only costs recomputation.
class ConstantCache {
 public:
  static constexpr const char* kEnvVar = "SCHUBERT_CACHE_DIR";

  explicit ConstantCache(std::filesystem::path dir);
  /// Directory named by the environment variable, if set and nonempty.
  static std::optional<std::filesystem::path> dir_from_env();

  std::optional<MultiPoly> lookup(const ConstantKey& key) const;
  void store(const ConstantKey& key, const MultiPoly& value, int nvars);
  std::size_t size() const;
  const std::filesystem::path& file() const { return file_; }

 private:
  std::filesystem::path file_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, MultiPoly> entries_;
  std::ofstream out_;
};

/// GKM triangular solve for equivariant structure constants: for fixed u, v
/// and every y in [e, w] in order of length,
///   C^y = (xi_{u|y} xi_{v|y} - sum_{y' < y} C^{y'} xi_{y'|y}) / xi_{y|y}.
/// Memoizes restrictions and constants; one instance per thread.
class StructureConstants {
 public:
  explicit StructureConstants(ConstantCache* cache = nullptr) : cache_(cache) {}

  MultiPoly equivariant(const WeylElement& u, const WeylElement& v, const WeylElement& w);
  /// Constant term of the equivariant constant when l(w) = l(u) + l(v), else 0.
  std::int64_t ordinary(const WeylElement& u, const WeylElement& v, const WeylElement& w);
  /// sum over u, v <= w with l(u) + l(v) = l(w) of ordinary(u, v, w).
  std::int64_t inner_sum(const WeylElement& w);

  /// y -> xi_{y|x} for every y <= x.
  const ElementMap<MultiPoly>& restrictions_at(const WeylElement& x);

 private:
  void solve(const WeylElement& u, const WeylElement& v, const WeylElement& w);

  ConstantCache* cache_;
  std::unordered_map<std::string, MultiPoly> constants_;
  ElementMap<ElementMap<MultiPoly>> restrictions_;
};

MultiPoly equivariant_constant(const WeylElement& u, const WeylElement& v, const WeylElement& w);
std::int64_t ordinary_constant(const WeylElement& u, const WeylElement& v, const WeylElement& w);
std::int64_t inner_sum(const WeylElement& w);

}  // namespace schubert
