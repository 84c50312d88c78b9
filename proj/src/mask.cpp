#include "synthcomp/mask.hpp"

#include <algorithm>

namespace synthcomp {

InstanceMask::InstanceMask(int width, int height)
    : width_(width), height_(height) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("InstanceMask: dimensions must be >= 1");
  }
  bits_.assign(static_cast<std::size_t>(width) * height, 0);
}

void InstanceMask::set(int x, int y, bool value) {
  std::uint8_t& cell = bits_[static_cast<std::size_t>(y) * width_ + x];
  if (cell != (value ? 1 : 0)) {
    area_ += value ? 1 : -1;
    cell = value ? 1 : 0;
  }
}

std::optional<Box> InstanceMask::tight_bbox() const {
  if (area_ == 0) return std::nullopt;
  int min_x = width_, min_y = height_, max_x = -1, max_y = -1;
  for (int y = 0; y < height_; ++y) {
    const std::uint8_t* row = bits_.data() + static_cast<std::size_t>(y) * width_;
    for (int x = 0; x < width_; ++x) {
      if (row[x]) {
        min_x = std::min(min_x, x);
        min_y = std::min(min_y, y);
        max_x = std::max(max_x, x);
        max_y = std::max(max_y, y);
      }
    }
  }
  return Box{min_x, min_y, max_x - min_x + 1, max_y - min_y + 1};
}

void InstanceMask::subtract(const InstanceMask& other) {
  if (other.width_ != width_ || other.height_ != height_) {
    throw std::invalid_argument("InstanceMask::subtract: dimension mismatch");
  }
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && other.bits_[i]) {
      bits_[i] = 0;
      --area_;
    }
  }
}

std::int64_t InstanceMask::intersection_area(const InstanceMask& other) const {
  if (other.width_ != width_ || other.height_ != height_) {
    throw std::invalid_argument("InstanceMask::intersection_area: dimension mismatch");
  }
  std::int64_t n = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    n += (bits_[i] & other.bits_[i]);
  }
  return n;
}

double mask_iou(const InstanceMask& a, const InstanceMask& b) {
  std::int64_t inter = a.intersection_area(b);
  std::int64_t uni = a.area() + b.area() - inter;
  if (uni == 0) return 1.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace synthcomp
