#include "synthcomp/rng.hpp"

namespace synthcomp {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return z;
}

}  // namespace

std::uint64_t RngStream::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double RngStream::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
  if (!(hi > lo)) return lo;
  return lo + (hi - lo) * next_double();
}

std::uint64_t RngStream::next_below(std::uint64_t n) {
  if (n <= 1) return 0;
  // Rejection sampling over the largest multiple of n.
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t v;
  do {
    v = next_u64();
  } while (v >= limit);
  return v % n;
}

std::uint64_t stable_hash64(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = 0xcbf29ce484222325ull ^ (seed * kGolden);
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return mix64(h);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view stage,
                          std::uint64_t index) {
  std::uint64_t h = stable_hash64(stage, master_seed);
  h = mix64(h ^ (index * kGolden) ^ master_seed);
  return h;
}

RngStream derive_rng(std::uint64_t master_seed, std::string_view stage,
                     std::uint64_t index) {
  return RngStream(derive_seed(master_seed, stage, index));
}

}  // namespace synthcomp
