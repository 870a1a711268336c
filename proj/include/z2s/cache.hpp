#pragma once

// Append-only results cache: one JSON object per line holding an invariant
// record, the tool version that produced it and the wall time it took.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "z2s/invariants.hpp"

namespace z2s {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kCacheEnvVar = "Z2S_CACHE";

struct CacheEntry {
  InvariantRecord record;
  std::string version;
  double wall_ms = 0;
};

class ResultsCache {
 public:
  /// Loads existing entries; a missing file is an empty cache. Lines written
  /// by another tool version or that fail to parse are skipped.
  explicit ResultsCache(std::filesystem::path path);

  const std::filesystem::path& path() const { return path_; }
  std::size_t size() const { return entries_.size(); }

  /// Latest entry for `spec`; with `need_verified` only brute-force checked
  /// records qualify.
  std::optional<InvariantRecord> lookup(const TypeSpec& spec, bool need_verified) const;

  void append(const InvariantRecord& record, double wall_ms);

 private:
  std::filesystem::path path_;
  std::vector<CacheEntry> entries_;
};

/// The --cache value when given, else $Z2S_CACHE when set and nonempty.
std::optional<std::filesystem::path> resolve_cache_path(const std::optional<std::string>& flag);

}  // namespace z2s
