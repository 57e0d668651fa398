#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace chuacrypt {

// 8-bit grayscale image, row-major.
class Image {
 public:
  Image() = default;
  // Throws std::invalid_argument on zero dimensions or a pixel count other
  // than width * height.
  Image(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels);
  Image(std::size_t width, std::size_t height, std::uint8_t fill = 0);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  std::uint8_t at(std::size_t row, std::size_t col) const { return pixels_[row * width_ + col]; }
  std::uint8_t& at(std::size_t row, std::size_t col) { return pixels_[row * width_ + col]; }

  const std::vector<std::uint8_t>& pixels() const noexcept { return pixels_; }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

}  // namespace chuacrypt
