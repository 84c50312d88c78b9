#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace synthcomp {

struct Box {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  bool operator==(const Box&) const = default;
};

/// Binary H x W raster with a maintained popcount. One byte per pixel; masks
/// in this pipeline are at most a few hundred pixels on a side.
class InstanceMask {
 public:
  InstanceMask() = default;
  InstanceMask(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }
  std::int64_t area() const { return area_; }
  bool empty() const { return area_ == 0; }

  bool get(int x, int y) const {
    return bits_[static_cast<std::size_t>(y) * width_ + x] != 0;
  }
  void set(int x, int y, bool value);

  bool in_bounds(int x, int y) const {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }

  /// Tight bounding box over set bits; nullopt when empty.
  std::optional<Box> tight_bbox() const;

  /// Clears every bit set in `other` (same dimensions required).
  void subtract(const InstanceMask& other);

  std::int64_t intersection_area(const InstanceMask& other) const;

  const std::vector<std::uint8_t>& bits() const { return bits_; }

  bool operator==(const InstanceMask&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::int64_t area_ = 0;
  std::vector<std::uint8_t> bits_;
};

double mask_iou(const InstanceMask& a, const InstanceMask& b);

}  // namespace synthcomp
