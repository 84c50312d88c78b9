#include "synthcomp/png_io.hpp"

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include <fstream>

#include "synthcomp/digest.hpp"

namespace synthcomp {

namespace {

cv::Mat to_bgr_mat(const ImageBuffer& image) {
  cv::Mat mat(image.height(), image.width(),
              image.channels() == 4 ? CV_8UC4 : CV_8UC3);
  for (int y = 0; y < image.height(); ++y) {
    std::uint8_t* row = mat.ptr<std::uint8_t>(y);
    for (int x = 0; x < image.width(); ++x) {
      row[x * image.channels() + 0] = image.at(x, y, 2);
      row[x * image.channels() + 1] = image.at(x, y, 1);
      row[x * image.channels() + 2] = image.at(x, y, 0);
      if (image.channels() == 4) {
        row[x * image.channels() + 3] = image.at(x, y, 3);
      }
    }
  }
  return mat;
}

}  // namespace

std::vector<std::uint8_t> encode_png(const ImageBuffer& image) {
  if (image.empty()) {
    throw std::invalid_argument("encode_png: empty image");
  }
  std::vector<std::uint8_t> bytes;
  std::vector<int> params{cv::IMWRITE_PNG_COMPRESSION, 3};
  if (!cv::imencode(".png", to_bgr_mat(image), bytes, params)) {
    throw std::runtime_error("encode_png: encoder failed");
  }
  return bytes;
}

ImageBuffer decode_png(const std::vector<std::uint8_t>& bytes) {
  cv::Mat mat = cv::imdecode(bytes, cv::IMREAD_UNCHANGED);
  if (mat.empty()) {
    throw std::runtime_error("decode_png: malformed PNG data");
  }
  if (mat.channels() == 1) {
    ImageBuffer image(mat.cols, mat.rows, 3);
    for (int y = 0; y < mat.rows; ++y) {
      const std::uint8_t* row = mat.ptr<std::uint8_t>(y);
      for (int x = 0; x < mat.cols; ++x) {
        image.set_rgb(x, y, Rgb{row[x], row[x], row[x]});
      }
    }
    return image;
  }
  if (mat.channels() != 3 && mat.channels() != 4) {
    throw std::runtime_error("decode_png: unsupported channel count");
  }
  ImageBuffer image(mat.cols, mat.rows, mat.channels());
  for (int y = 0; y < mat.rows; ++y) {
    const std::uint8_t* row = mat.ptr<std::uint8_t>(y);
    for (int x = 0; x < mat.cols; ++x) {
      image.at(x, y, 0) = row[x * mat.channels() + 2];
      image.at(x, y, 1) = row[x * mat.channels() + 1];
      image.at(x, y, 2) = row[x * mat.channels() + 0];
      if (mat.channels() == 4) {
        image.at(x, y, 3) = row[x * mat.channels() + 3];
      }
    }
  }
  return image;
}

void write_png(const std::filesystem::path& path, const ImageBuffer& image) {
  auto bytes = encode_png(image);
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("write_png: cannot open " + path.string());
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw std::runtime_error("write_png: write failed for " + path.string());
  }
}

ImageBuffer read_png(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("read_png: cannot open " + path.string());
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return decode_png(bytes);
}

std::string pixel_digest(const ImageBuffer& image) {
  Sha256 h;
  std::int32_t header[3] = {image.width(), image.height(), image.channels()};
  h.update(header, sizeof(header));
  h.update(image.data().data(), image.data().size());
  return h.hex_digest();
}

}  // namespace synthcomp
