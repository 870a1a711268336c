#include "z2s/cache.hpp"

#include <cstdlib>
#include <fstream>

#include "z2s/errors.hpp"
#include "z2s/serialize.hpp"

namespace z2s {

ResultsCache::ResultsCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("record")) continue;
    if (j.value("version", "") != kToolVersion) continue;
    try {
      entries_.push_back({record_from_json(j.at("record")), j.at("version").get<std::string>(),
                          j.value("wall_ms", 0.0)});
    } catch (const Error&) {
      continue;
    }
  }
}

std::optional<InvariantRecord> ResultsCache::lookup(const TypeSpec& spec, bool need_verified) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (it->record.spec != spec) continue;
    if (need_verified && it->record.kernel_check != KernelCheck::verified_bruteforce) continue;
    return it->record;
  }
  return std::nullopt;
}

void ResultsCache::append(const InvariantRecord& record, double wall_ms) {
  std::ofstream out(path_, std::ios::app);
  if (!out) throw UsageError("cannot open cache file " + path_.string());
  nlohmann::json j = {{"version", kToolVersion}, {"wall_ms", wall_ms}, {"record", to_json(record)}};
  out << j.dump() << '\n';
  entries_.push_back({record, kToolVersion, wall_ms});
}

std::optional<std::filesystem::path> resolve_cache_path(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  if (const char* env = std::getenv(kCacheEnvVar); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

}  // namespace z2s
