#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace synthcomp {

/// Counter-based pseudo-random stream. The state advances by a fixed odd
/// increment and each output is a bijective mix of the counter, so streams
/// seeded from distinct keys are independent and reproducible across
/// processes and platforms.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  /// Uniform double in [0, 1), 53-bit resolution.
  double next_double();

  /// Uniform double in [lo, hi). Degenerate range returns lo.
  double uniform(double lo, double hi);

  /// Uniform integer in [0, n) without modulo bias. n must be >= 1.
  std::uint64_t next_below(std::uint64_t n);

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t state_;
};

/// Keyed 64-bit hash of (master_seed, stage, index). Distinct keys map to
/// distinct stream seeds with overwhelming probability; the mapping is the
/// reproducibility anchor for every randomized pipeline stage.
std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view stage,
                          std::uint64_t index);

RngStream derive_rng(std::uint64_t master_seed, std::string_view stage,
                     std::uint64_t index);

/// Stable 64-bit hash of arbitrary bytes (FNV-1a with a strong finalizer).
/// Used wherever a deterministic token/content hash is needed.
std::uint64_t stable_hash64(std::string_view bytes, std::uint64_t seed = 0);

}  // namespace synthcomp
