#include "chuacrypt/image.hpp"

#include <stdexcept>
#include <utility>

namespace chuacrypt {

Image::Image(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width == 0 || height == 0) throw std::invalid_argument("image dimensions must be positive");
  if (pixels_.size() / width != height || pixels_.size() % width != 0) {
    throw std::invalid_argument("pixel count does not match image dimensions");
  }
}

Image::Image(std::size_t width, std::size_t height, std::uint8_t fill)
    : Image(width, height, std::vector<std::uint8_t>(width * height, fill)) {}

}  // namespace chuacrypt
