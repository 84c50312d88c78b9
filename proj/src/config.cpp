#include "synthcomp/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace synthcomp {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& key,
                       const std::string& what) {
  std::ostringstream msg;
  msg << origin << ":" << line;
  if (!key.empty()) msg << ": key '" << key << "'";
  msg << ": " << what;
  throw ConfigError(msg.str());
}

std::int64_t parse_int(const std::string& value, const std::string& origin, int line,
                       const std::string& key) {
  std::int64_t out = 0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last) {
    fail(origin, line, key, "expected an integer, got '" + value + "'");
  }
  return out;
}

std::uint64_t parse_u64(const std::string& value, const std::string& origin, int line,
                        const std::string& key) {
  std::uint64_t out = 0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last) {
    fail(origin, line, key, "expected an unsigned integer, got '" + value + "'");
  }
  return out;
}

double parse_real(const std::string& value, const std::string& origin, int line,
                  const std::string& key) {
  try {
    std::size_t pos = 0;
    double out = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return out;
  } catch (const std::exception&) {
    fail(origin, line, key, "expected a real number, got '" + value + "'");
  }
}

std::vector<std::string> parse_template_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, '|')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string join_templates(const std::vector<std::string>& templates) {
  std::string out;
  for (std::size_t i = 0; i < templates.size(); ++i) {
    if (i) out += " | ";
    out += templates[i];
  }
  return out;
}

}  // namespace

const std::vector<std::string>& default_fg_templates() {
  static const std::vector<std::string> templates = {
      "A photo of <object>",
      "A realistic photo of <object>",
      "A photo of <object> in pure background",
      "<object> in a white background",
      "<object> without background",
      "<object> isolated on white background",
  };
  return templates;
}

const std::vector<std::string>& default_context_templates() {
  static const std::vector<std::string> templates = {
      "a real image of <context>",
      "an image showing <context>",
      "a wide view of <context>",
      "a scene of <context>",
  };
  return templates;
}

const std::vector<std::string>& default_zero_shot_sentences() {
  // Placeholder context sentences for the zero-shot setting; replace with
  // deployment-specific ones via relations.tsv or a caller-provided list.
  static const std::vector<std::string> sentences = {
      "a real image of a kitchen",
      "a real image of a living room",
      "a real image of a city street",
      "a real image of a park",
      "a real image of a forest",
      "a real image of a beach",
      "a real image of an office",
      "a real image of a grass field",
      "a real image of a mountain landscape",
      "a real image of a lake shore",
      "a real image of a dining room",
      "a real image of a garden",
      "a real image of a highway",
      "a real image of a snowy field",
      "a real image of a desert",
      "a real image of a harbor",
  };
  return sentences;
}

PipelineConfig PipelineConfig::defaults() {
  PipelineConfig config;
  config.fg_templates = default_fg_templates();
  config.context_templates = default_context_templates();
  return config;
}

void PipelineConfig::validate() const {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw ConfigError("config invariant violated: " + what);
  };
  require(num_cdis_per_class >= 0, "num_cdis_per_class must be >= 0");
  require(captions_per_cdi >= 1, "captions_per_cdi must be >= 1");
  require(images_per_caption >= 1, "images_per_caption must be >= 1");
  require(keep_per_caption >= 1, "keep_per_caption must be >= 1");
  require(keep_per_caption <= images_per_caption,
          "keep_per_caption must be <= images_per_caption");
  require(zero_shot_templates >= 0, "zero_shot_templates must be >= 0");
  require(images_per_zero_shot_template >= 1,
          "images_per_zero_shot_template must be >= 1");
  require(zero_shot_prune_fraction >= 0.0 && zero_shot_prune_fraction <= 1.0,
          "zero_shot_prune_fraction must be in [0,1]");
  require(!fg_templates.empty(), "fg_templates must be nonempty");
  require(fg_images_per_template >= 1, "fg_images_per_template must be >= 1");
  require(fg_keep_per_template >= 1, "fg_keep_per_template must be >= 1");
  require(fg_keep_per_template <= fg_images_per_template,
          "fg_keep_per_template must be <= fg_images_per_template");
  require(pastes_per_image >= 0, "pastes_per_image must be >= 0");
  require(target_dataset_size >= 1, "target_dataset_size must be >= 1");
  require(blur_sigma >= 0.0, "blur_sigma must be >= 0");
  require(rotation_range >= 0.0, "rotation_range must be >= 0");
  require(scale_min > 0.0, "scale_range minimum must be > 0");
  require(scale_max >= scale_min, "scale_range maximum must be >= minimum");
  require(min_visible_fraction > 0.0 && min_visible_fraction <= 1.0,
          "min_visible_fraction must be in (0,1]");
  require(occlusion_drop_fraction > 0.0 && occlusion_drop_fraction <= 1.0,
          "occlusion_drop_fraction must be in (0,1]");
  require(image_width >= 1 && image_height >= 1, "image_size must be >= 1x1");
  require(reject_threshold >= -1.0 && reject_threshold <= 1.0,
          "reject_threshold must be in [-1,1]");
  require(filter_mode == "reject_then_rank" || filter_mode == "weighted",
          "filter_mode must be reject_then_rank or weighted");
  require(!context_templates.empty(), "context_templates must be nonempty");
}

PipelineConfig parse_config(const std::string& text, const std::string& origin) {
  PipelineConfig config = PipelineConfig::defaults();
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      fail(origin, line_no, "", "expected 'key = value', got '" + line + "'");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(origin, line_no, "", "empty key");

    if (key == "num_cdis_per_class") {
      config.num_cdis_per_class = static_cast<int>(parse_int(value, origin, line_no, key));
    } else if (key == "captions_per_cdi") {
      config.captions_per_cdi = static_cast<int>(parse_int(value, origin, line_no, key));
    } else if (key == "images_per_caption") {
      config.images_per_caption = static_cast<int>(parse_int(value, origin, line_no, key));
    } else if (key == "keep_per_caption") {
      config.keep_per_caption = static_cast<int>(parse_int(value, origin, line_no, key));
    } else if (key == "zero_shot_templates") {
      config.zero_shot_templates = static_cast<int>(parse_int(value, origin, line_no, key));
    } else if (key == "images_per_zero_shot_template") {
      config.images_per_zero_shot_template =
          static_cast<int>(parse_int(value, origin, line_no, key));
    } else if (key == "zero_shot_prune_fraction") {
      config.zero_shot_prune_fraction = parse_real(value, origin, line_no, key);
    } else if (key == "fg_templates") {
      config.fg_templates = parse_template_list(value);
      if (config.fg_templates.empty()) {
        fail(origin, line_no, key, "expected '|'-separated template list");
      }
    } else if (key == "fg_images_per_template") {
      config.fg_images_per_template = static_cast<int>(parse_int(value, origin, line_no, key));
    } else if (key == "fg_keep_per_template") {
      config.fg_keep_per_template = static_cast<int>(parse_int(value, origin, line_no, key));
    } else if (key == "pastes_per_image") {
      config.pastes_per_image = static_cast<int>(parse_int(value, origin, line_no, key));
    } else if (key == "target_dataset_size") {
      config.target_dataset_size = parse_int(value, origin, line_no, key);
    } else if (key == "blur_sigma") {
      config.blur_sigma = parse_real(value, origin, line_no, key);
    } else if (key == "rotation_range") {
      config.rotation_range = parse_real(value, origin, line_no, key);
    } else if (key == "scale_range") {
      std::size_t comma = value.find(',');
      if (comma == std::string::npos) {
        fail(origin, line_no, key, "expected 'min, max'");
      }
      config.scale_min = parse_real(trim(value.substr(0, comma)), origin, line_no, key);
      config.scale_max = parse_real(trim(value.substr(comma + 1)), origin, line_no, key);
    } else if (key == "min_visible_fraction") {
      config.min_visible_fraction = parse_real(value, origin, line_no, key);
    } else if (key == "occlusion_drop_fraction") {
      config.occlusion_drop_fraction = parse_real(value, origin, line_no, key);
    } else if (key == "image_size") {
      std::size_t x = value.find('x');
      if (x == std::string::npos) x = value.find('X');
      if (x == std::string::npos) {
        fail(origin, line_no, key, "expected WIDTHxHEIGHT");
      }
      config.image_width =
          static_cast<int>(parse_int(trim(value.substr(0, x)), origin, line_no, key));
      config.image_height =
          static_cast<int>(parse_int(trim(value.substr(x + 1)), origin, line_no, key));
    } else if (key == "master_seed") {
      config.master_seed = parse_u64(value, origin, line_no, key);
    } else if (key == "reject_threshold") {
      config.reject_threshold = parse_real(value, origin, line_no, key);
    } else if (key == "filter_mode") {
      config.filter_mode = value;
    } else if (key == "filter_class_weight") {
      config.filter_class_weight = parse_real(value, origin, line_no, key);
    } else if (key == "class_prompt_template") {
      config.class_prompt_template = value;
    } else if (key == "context_templates") {
      config.context_templates = parse_template_list(value);
      if (config.context_templates.empty()) {
        fail(origin, line_no, key, "expected '|'-separated template list");
      }
    } else {
      fail(origin, line_no, key, "unknown key");
    }
  }
  try {
    config.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(origin + ": " + e.what());
  }
  return config;
}

PipelineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("config: cannot open " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path.string());
}

std::string serialize_config(const PipelineConfig& config) {
  std::ostringstream out;
  out.precision(17);
  out << "num_cdis_per_class = " << config.num_cdis_per_class << '\n'
      << "captions_per_cdi = " << config.captions_per_cdi << '\n'
      << "images_per_caption = " << config.images_per_caption << '\n'
      << "keep_per_caption = " << config.keep_per_caption << '\n'
      << "zero_shot_templates = " << config.zero_shot_templates << '\n'
      << "images_per_zero_shot_template = " << config.images_per_zero_shot_template << '\n'
      << "zero_shot_prune_fraction = " << config.zero_shot_prune_fraction << '\n'
      << "fg_templates = " << join_templates(config.fg_templates) << '\n'
      << "fg_images_per_template = " << config.fg_images_per_template << '\n'
      << "fg_keep_per_template = " << config.fg_keep_per_template << '\n'
      << "pastes_per_image = " << config.pastes_per_image << '\n'
      << "target_dataset_size = " << config.target_dataset_size << '\n'
      << "blur_sigma = " << config.blur_sigma << '\n'
      << "rotation_range = " << config.rotation_range << '\n'
      << "scale_range = " << config.scale_min << ", " << config.scale_max << '\n'
      << "min_visible_fraction = " << config.min_visible_fraction << '\n'
      << "occlusion_drop_fraction = " << config.occlusion_drop_fraction << '\n'
      << "image_size = " << config.image_width << 'x' << config.image_height << '\n'
      << "master_seed = " << config.master_seed << '\n'
      << "reject_threshold = " << config.reject_threshold << '\n'
      << "filter_mode = " << config.filter_mode << '\n'
      << "filter_class_weight = " << config.filter_class_weight << '\n'
      << "class_prompt_template = " << config.class_prompt_template << '\n'
      << "context_templates = " << join_templates(config.context_templates) << '\n';
  return out.str();
}

CountPlan expected_counts(const PipelineConfig& config, const ClassVocabulary& vocab) {
  CountPlan plan;
  plan.classes = static_cast<std::int64_t>(vocab.size());
  std::int64_t captions = plan.classes * config.num_cdis_per_class * config.captions_per_cdi;
  plan.contexts_generated = captions * config.images_per_caption;
  plan.contexts_kept = captions * config.keep_per_caption;
  plan.zero_shot_generated =
      std::int64_t{config.zero_shot_templates} * config.images_per_zero_shot_template;
  std::int64_t pruned = static_cast<std::int64_t>(
      std::ceil(config.zero_shot_prune_fraction * static_cast<double>(plan.zero_shot_generated)));
  plan.zero_shot_kept = plan.zero_shot_generated - pruned;
  plan.foregrounds_generated = plan.classes *
                               static_cast<std::int64_t>(config.fg_templates.size()) *
                               config.fg_images_per_template;
  plan.foregrounds_kept = plan.classes *
                          static_cast<std::int64_t>(config.fg_templates.size()) *
                          config.fg_keep_per_template;
  plan.target_samples = config.target_dataset_size;
  plan.paste_attempts = config.target_dataset_size * config.pastes_per_image;
  return plan;
}

}  // namespace synthcomp
