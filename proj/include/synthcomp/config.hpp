#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "synthcomp/vocab.hpp"

namespace synthcomp {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All knobs of the generation pipeline. Defaults reproduce the reference
/// operating point: 2 captions per context image, 80 generations per caption
/// keeping 30, 16 zero-shot templates at 600 images pruning 5%, six
/// foreground templates at 500 images keeping 250, 4 pastes per sample and a
/// 60,000-sample target.
struct PipelineConfig {
  int num_cdis_per_class = 1;
  int captions_per_cdi = 2;
  int images_per_caption = 80;
  int keep_per_caption = 30;
  int zero_shot_templates = 16;
  int images_per_zero_shot_template = 600;
  double zero_shot_prune_fraction = 0.05;
  std::vector<std::string> fg_templates;  // default set applied by defaults()
  int fg_images_per_template = 500;
  int fg_keep_per_template = 250;
  int pastes_per_image = 4;
  std::int64_t target_dataset_size = 60000;
  double blur_sigma = 2.0;
  double rotation_range = 30.0;  // symmetric, degrees
  double scale_min = 0.5;
  double scale_max = 1.5;
  double min_visible_fraction = 0.25;
  double occlusion_drop_fraction = 0.25;
  int image_width = 512;
  int image_height = 512;
  std::uint64_t master_seed = 0;

  // Filtering knobs (reject-then-rank by default; a weighted single-score
  // mode is available but makes no fidelity claim).
  double reject_threshold = 0.26;
  std::string filter_mode = "reject_then_rank";  // or "weighted"
  double filter_class_weight = 1.0;
  std::string class_prompt_template = "a photo of <object>";

  std::vector<std::string> context_templates;  // default set applied by defaults()

  static PipelineConfig defaults();

  /// Throws ConfigError naming the offending field on invariant violation.
  void validate() const;

  bool operator==(const PipelineConfig&) const = default;
};

const std::vector<std::string>& default_fg_templates();
const std::vector<std::string>& default_context_templates();
const std::vector<std::string>& default_zero_shot_sentences();

/// Plain-text "key = value" format, '#' comments. Unknown keys, malformed
/// values and invariant violations raise ConfigError with key and line.
PipelineConfig load_config(const std::filesystem::path& path);
PipelineConfig parse_config(const std::string& text, const std::string& origin = "<string>");

/// Canonical key=value rendering; parse(serialize(c)) == c.
std::string serialize_config(const PipelineConfig& config);

/// Per-stage generated/kept totals implied by a config and vocabulary.
struct CountPlan {
  std::int64_t classes = 0;
  std::int64_t contexts_generated = 0;   // |classes| * N * K * M
  std::int64_t contexts_kept = 0;        // |classes| * N * K * keep
  std::int64_t zero_shot_generated = 0;  // templates * per_template
  std::int64_t zero_shot_kept = 0;       // generated - ceil(fraction * generated)
  std::int64_t foregrounds_generated = 0;
  std::int64_t foregrounds_kept = 0;
  std::int64_t target_samples = 0;
  std::int64_t paste_attempts = 0;  // target * G
};

CountPlan expected_counts(const PipelineConfig& config, const ClassVocabulary& vocab);

}  // namespace synthcomp
