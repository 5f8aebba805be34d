#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "semiquad/io.hpp"

namespace semiquad {

/// Bumped whenever engine output for a fixed input may change.
inline constexpr const char* kEngineVersion = "semiquad-engine-1";

/// Environment variable naming the default cache directory.
inline constexpr const char* kCacheDirEnv = "SEMIQUAD_CACHE_DIR";

struct RunRecord {
  std::string presentation_hash;
  std::string operation;
  Json parameters;
  Json result;
  double wall_seconds = 0.0;
  std::string engine_version = kEngineVersion;
};

Json run_record_to_json(const RunRecord& r);
RunRecord run_record_from_json(const Json& j);

/// Append-only JSON-lines store at <dir>/runs.jsonl. A lookup hits only on
/// an exact (hash, operation, parameters, engine version) match; the latest
/// matching line wins. Unparseable lines are skipped.
class RunCache {
 public:
  explicit RunCache(std::filesystem::path dir);

  const std::filesystem::path& file() const noexcept { return file_; }

  std::optional<RunRecord> lookup(const std::string& hash, const std::string& operation,
                                  const Json& parameters) const;
  void store(const RunRecord& record) const;

 private:
  std::filesystem::path file_;
};

}  // namespace semiquad
