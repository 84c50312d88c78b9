#include "synthcomp/manifest.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "synthcomp/digest.hpp"

namespace synthcomp {

using ordered_json = nlohmann::ordered_json;

void RunManifest::add_stage(StageRecord record) {
  for (auto& existing : stages) {
    if (existing.name == record.name) {
      existing = std::move(record);
      return;
    }
  }
  stages.push_back(std::move(record));
}

const StageRecord* RunManifest::find_stage(const std::string& name) const {
  for (const auto& stage : stages) {
    if (stage.name == name) return &stage;
  }
  return nullptr;
}

std::string RunManifest::to_json() const {
  ordered_json doc;
  doc["tool_version"] = tool_version;
  doc["config_digest"] = config_digest;
  doc["master_seed"] = master_seed;
  doc["stages"] = ordered_json::array();
  for (const auto& stage : stages) {
    ordered_json rec;
    rec["name"] = stage.name;
    rec["counts"] = ordered_json::object();
    for (const auto& [key, value] : stage.counts) {
      rec["counts"][key] = value;
    }
    rec["digest"] = stage.digest;
    doc["stages"].push_back(std::move(rec));
  }
  return doc.dump(2) + "\n";
}

RunManifest RunManifest::from_json(const std::string& text) {
  ordered_json doc = ordered_json::parse(text);
  RunManifest manifest;
  manifest.tool_version = doc.at("tool_version").get<std::string>();
  manifest.config_digest = doc.at("config_digest").get<std::string>();
  manifest.master_seed = doc.at("master_seed").get<std::uint64_t>();
  for (const auto& rec : doc.at("stages")) {
    StageRecord stage;
    stage.name = rec.at("name").get<std::string>();
    for (auto it = rec.at("counts").begin(); it != rec.at("counts").end(); ++it) {
      stage.counts[it.key()] = it.value().get<std::int64_t>();
    }
    stage.digest = rec.at("digest").get<std::string>();
    manifest.stages.push_back(std::move(stage));
  }
  return manifest;
}

void RunManifest::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("manifest: cannot open " + path.string());
  }
  out << to_json();
  if (!out) {
    throw std::runtime_error("manifest: write failed for " + path.string());
  }
}

RunManifest RunManifest::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("manifest: cannot open " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return from_json(text.str());
}

std::string config_digest(const PipelineConfig& config, const ClassVocabulary& vocab) {
  Sha256 hasher;
  hasher.update(serialize_config(config));
  hasher.update("\n--vocab--\n");
  hasher.update(vocab.canonical_text());
  return hasher.hex_digest();
}

RunManifest make_manifest(const PipelineConfig& config, const ClassVocabulary& vocab) {
  RunManifest manifest;
  manifest.config_digest = config_digest(config, vocab);
  manifest.master_seed = config.master_seed;
  return manifest;
}

}  // namespace synthcomp
