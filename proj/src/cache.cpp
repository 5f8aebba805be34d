#include "semiquad/cache.hpp"

#include <fstream>

namespace semiquad {

Json run_record_to_json(const RunRecord& r) {
  return {{"hash", r.presentation_hash}, {"operation", r.operation},
          {"parameters", r.parameters},  {"result", r.result},
          {"wall_seconds", r.wall_seconds}, {"engine_version", r.engine_version}};
}

RunRecord run_record_from_json(const Json& j) {
  RunRecord r;
  r.presentation_hash = j.at("hash").get<std::string>();
  r.operation = j.at("operation").get<std::string>();
  r.parameters = j.at("parameters");
  r.result = j.at("result");
  r.wall_seconds = j.value("wall_seconds", 0.0);
  r.engine_version = j.at("engine_version").get<std::string>();
  return r;
}

RunCache::RunCache(std::filesystem::path dir) : file_(std::move(dir) / "runs.jsonl") {}

std::optional<RunRecord> RunCache::lookup(const std::string& hash, const std::string& operation,
                                          const Json& parameters) const {
  std::ifstream in(file_);
  if (!in) return std::nullopt;
  std::optional<RunRecord> hit;
  std::string line;
  while (std::getline(in, line)) {
    const Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) continue;
    try {
      RunRecord r = run_record_from_json(j);
      if (r.presentation_hash == hash && r.operation == operation && r.parameters == parameters &&
          r.engine_version == kEngineVersion) {
        hit = std::move(r);
      }
    } catch (const Json::exception&) {
    }
  }
  return hit;
}

void RunCache::store(const RunRecord& record) const {
  std::filesystem::create_directories(file_.parent_path());
  std::ofstream out(file_, std::ios::app);
  if (!out) throw UsageError("cannot write cache file " + file_.string());
  out << run_record_to_json(record).dump() << '\n';
}

}  // namespace semiquad
