#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace synthcomp {

/// Incremental SHA-256 yielding lowercase hex strings. Used for config
/// digests, asset deduplication and per-stage manifest digests.
class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  void update(const void* data, std::size_t len);
  void update(const std::string& s);
  std::string hex_digest();

 private:
  void* ctx_;
};

std::string sha256_hex(const void* data, std::size_t len);
std::string sha256_hex(const std::string& s);
std::string sha256_hex(const std::vector<std::uint8_t>& data);

}  // namespace synthcomp
