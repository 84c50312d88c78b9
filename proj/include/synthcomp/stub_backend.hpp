#pragma once

#include <optional>

#include "synthcomp/backend.hpp"
#include "synthcomp/mask.hpp"

namespace synthcomp {

/// Deterministic procedural backend for offline runs and tests.
///
/// Contract:
///  - txt2img fills the canvas with a color hashed from the prompt tokens and
///    adds faint per-pixel noise. A prompt containing "photo of" or
///    "background" is treated as a foreground prompt: a hash-parameterized
///    polygon is drawn centered on the near-uniform backdrop, so mask
///    extraction has known ground truth (`ground_truth_mask`).
///  - Every generated image carries a small token signature block so the stub
///    embedder can recover the prompt tokens from pixels; cross-modal
///    similarity is therefore token overlap.
///  - The embedder is a 64-dimensional hashed bag-of-words over content
///    tokens (stopwords dropped), L2-normalized.
///  - The captioner describes the dominant border color and a shape word:
///    "a photo of <color> background with <shape>".
class StubBackend : public Backend {
 public:
  static constexpr int kEmbedDim = 64;

  BackendInfo info() override;

  std::vector<ImageHandle> generate_images(const Caption& prompt, int n,
                                           std::uint64_t seed, int width,
                                           int height) override;

  std::vector<Caption> caption_image(const ImageBuffer& image, int k) override;

  std::vector<EmbeddingVector> embed(
      const std::vector<std::string>& texts,
      const std::vector<const ImageBuffer*>& images) override;

  /// Ground-truth object raster for a single generated image, or nullopt for
  /// a context prompt (no object drawn).
  std::optional<InstanceMask> ground_truth_mask(const Caption& prompt,
                                                std::uint64_t request_seed,
                                                int index, int width, int height);

  /// Exposed for oracle tests: the embedding a text receives.
  static EmbeddingVector embed_text(const std::string& text);

  /// Exposed for oracle tests: dominant border color word of an image.
  static std::string border_color_word(const ImageBuffer& image);

  static bool is_foreground_prompt(const std::string& text);
};

}  // namespace synthcomp
