#pragma once

#include <filesystem>
#include <memory>
#include <optional>

#include "json.hpp"
#include "p1gw/correlators.hpp"
#include "p1gw/resolvent.hpp"

namespace p1gw {

using Json = nlohmann::ordered_json;

/// {"-2": "120", "0": "40"} keyed by eps exponent, ascending.
Json eps_to_json(const EpsLaurent& v);
EpsLaurent eps_from_json(const Json& j);

/// {"depth": N, "terms": [{"lam": e, "eps": [{"exp": m, "val": "p/q"}]}]},
/// lambda exponents descending. Exact series store depth null.
Json series_to_json(const LambdaSeries& s);
LambdaSeries series_from_json(const Json& j);

/// {"insertions": [...], "eps_series": {...}, "by_genus": [{"g", "d", "value"}],
///  "depth": N, "stable": bool}
Json record_to_json(const CorrelatorRecord& r);
CorrelatorRecord record_from_json(const Json& j);

/// On-disk resolvent cache: one file per directory holding the deepest
/// bundle written so far.
class ResolventCache {
 public:
  explicit ResolventCache(std::filesystem::path dir);

  const std::filesystem::path& file() const { return file_; }

  /// Bundle from disk, or nullopt when no file exists. Throws CacheCorrupt
  /// when the file is unreadable, has the wrong header, or its leading
  /// coefficients differ from the published ones.
  std::optional<ResolventBundle> load() const;

  /// Atomic write (temporary file, then rename). Skips the write when the
  /// stored bundle is already at least as deep.
  void store(const ResolventBundle& bundle) const;

 private:
  std::filesystem::path dir_;
  std::filesystem::path file_;
};

Json bundle_to_json(const ResolventBundle& b);
ResolventBundle bundle_from_json(const Json& j);

/// Throws CacheCorrupt unless R matches the published lambda^0..lambda^-4 terms.
void validate_resolvent_head(const ResolventBundle& b);

}  // namespace p1gw
