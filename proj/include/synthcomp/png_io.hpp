#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "synthcomp/image.hpp"

namespace synthcomp {

/// Lossless PNG bytes for a 3- or 4-channel buffer.
std::vector<std::uint8_t> encode_png(const ImageBuffer& image);

/// Decodes a PNG, preserving an alpha channel when present.
/// Throws std::runtime_error on malformed data.
ImageBuffer decode_png(const std::vector<std::uint8_t>& bytes);

void write_png(const std::filesystem::path& path, const ImageBuffer& image);
ImageBuffer read_png(const std::filesystem::path& path);

/// Digest of the raw pixel content (dimensions + channel bytes), independent
/// of PNG encoder settings.
std::string pixel_digest(const ImageBuffer& image);

}  // namespace synthcomp
