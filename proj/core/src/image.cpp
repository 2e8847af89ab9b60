#include "chaocrypt/image.hpp"

#include <string>

#include "chaocrypt/error.hpp"

namespace chaocrypt {

ImageBuffer::ImageBuffer(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width < 2 || height < 2)
    raise(Errc::MalformedImage, "image must be at least 2x2, got " + std::to_string(width) + "x" +
                                    std::to_string(height));
  if (pixels_.size() != width * height)
    raise(Errc::MalformedImage, "pixel count " + std::to_string(pixels_.size()) +
                                    " does not match " + std::to_string(width) + "x" +
                                    std::to_string(height));
}

ImageBuffer::ImageBuffer(std::size_t width, std::size_t height)
    : ImageBuffer(width, height, std::vector<std::uint8_t>(width * height, 0)) {}

ImageBuffer to_grayscale(std::span<const std::uint8_t> rgb, std::size_t width, std::size_t height) {
  if (rgb.size() != 3 * width * height)
    raise(Errc::MalformedImage, "RGB buffer size does not match dimensions");
  std::vector<std::uint8_t> gray(width * height);
  for (std::size_t i = 0; i < gray.size(); ++i) {
    const unsigned r = rgb[3 * i], g = rgb[3 * i + 1], b = rgb[3 * i + 2];
    gray[i] = static_cast<std::uint8_t>((299 * r + 587 * g + 114 * b + 500) / 1000);
  }
  return ImageBuffer(width, height, std::move(gray));
}

}  // namespace chaocrypt
