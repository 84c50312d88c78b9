#include "synthcomp/image.hpp"

namespace synthcomp {

int rgb_distance_sq(const Rgb& a, const Rgb& b) {
  int dr = int(a.r) - int(b.r);
  int dg = int(a.g) - int(b.g);
  int db = int(a.b) - int(b.b);
  return dr * dr + dg * dg + db * db;
}

ImageBuffer::ImageBuffer(int width, int height, int channels, std::uint8_t fill)
    : width_(width), height_(height), channels_(channels) {
  if (width < 1 || height < 1 || (channels != 3 && channels != 4)) {
    throw std::invalid_argument("ImageBuffer: bad dimensions or channel count");
  }
  data_.assign(static_cast<std::size_t>(width) * height * channels, fill);
}

}  // namespace synthcomp
