#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "synthcomp/config.hpp"
#include "synthcomp/vocab.hpp"

namespace synthcomp {

inline constexpr const char* kToolVersion = "0.1.0";

struct StageRecord {
  std::string name;
  std::map<std::string, std::int64_t> counts;
  std::string digest;  // hex digest over the stage's output identity
};

/// Reproducibility root of a run: the config/vocabulary digest, the master
/// seed and one record per completed stage. Serialized as manifest.json.
struct RunManifest {
  std::string config_digest;
  std::uint64_t master_seed = 0;
  std::string tool_version = kToolVersion;
  std::vector<StageRecord> stages;

  void add_stage(StageRecord record);
  const StageRecord* find_stage(const std::string& name) const;

  std::string to_json() const;
  static RunManifest from_json(const std::string& text);

  void save(const std::filesystem::path& path) const;
  static RunManifest load(const std::filesystem::path& path);
};

/// Digest over the logical content of config + vocabulary (key order and
/// whitespace independent by construction of the canonical forms).
std::string config_digest(const PipelineConfig& config, const ClassVocabulary& vocab);

RunManifest make_manifest(const PipelineConfig& config, const ClassVocabulary& vocab);

}  // namespace synthcomp
