#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "synthcomp/image.hpp"
#include "synthcomp/prompt.hpp"
#include "synthcomp/rng.hpp"

namespace synthcomp {

struct BackendError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ProtocolError : BackendError {
  using BackendError::BackendError;
};

struct BackendInfo {
  std::string backend_id;
  int embed_dim = 0;
};

struct ImageHandle {
  ImageBuffer pixels;  // RGB
  Caption prompt;
  std::uint64_t gen_seed = 0;
  std::string backend_id;
};

/// Unit-norm semantic vector (L2 norm 1 within 1e-6).
struct EmbeddingVector {
  std::vector<float> values;

  int dim() const { return static_cast<int>(values.size()); }
  void normalize();
};

struct BackendEndpoint {
  std::string base_url;
  double timeout_seconds = 30.0;
  int max_retries = 3;
  int max_in_flight = 4;
};

/// Per-image generation seed; retried requests regenerate identical images.
inline std::uint64_t derive_image_seed(std::uint64_t request_seed, int index) {
  return derive_seed(request_seed, "image", static_cast<std::uint64_t>(index));
}

/// Uniform access to text-to-image, captioning and embedding. Implementations
/// must be safe to share across threads.
class Backend {
 public:
  virtual ~Backend() = default;

  virtual BackendInfo info() = 0;

  /// Exactly n images at the requested size, deterministic in
  /// (prompt, seed, size). n = 0 performs no work.
  virtual std::vector<ImageHandle> generate_images(const Caption& prompt, int n,
                                                   std::uint64_t seed, int width,
                                                   int height) = 0;

  /// Exactly k captions with source = cdi_caption.
  virtual std::vector<Caption> caption_image(const ImageBuffer& image, int k) = 0;

  /// One unit-norm vector per input, texts first then images, all of the
  /// dimension advertised by info(). At least one input is required.
  virtual std::vector<EmbeddingVector> embed(
      const std::vector<std::string>& texts,
      const std::vector<const ImageBuffer*>& images) = 0;
};

}  // namespace synthcomp
