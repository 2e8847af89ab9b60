#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace chaocrypt {

/// Read-only grayscale view; analysis routines take this so they also work on
/// degenerate shapes (a single row, a single pixel pair).
struct PixelView {
  std::span<const std::uint8_t> pixels;
  std::size_t width = 0;
  std::size_t height = 0;

  std::uint8_t at(std::size_t row, std::size_t col) const noexcept {
    return pixels[row * width + col];
  }
  std::size_t size() const noexcept { return pixels.size(); }
};

/// Row-major 8-bit grayscale image, at least 2x2.
class ImageBuffer {
 public:
  ImageBuffer() = default;
  /// Throws Errc::MalformedImage when the shape is smaller than 2x2 or
  /// `pixels.size() != width * height`.
  ImageBuffer(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels);
  /// Zero-filled image.
  ImageBuffer(std::size_t width, std::size_t height);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::span<std::uint8_t> pixels() noexcept { return pixels_; }
  std::vector<std::uint8_t> release() && { return std::move(pixels_); }

  std::uint8_t at(std::size_t row, std::size_t col) const noexcept {
    return pixels_[row * width_ + col];
  }
  std::uint8_t& at(std::size_t row, std::size_t col) noexcept {
    return pixels_[row * width_ + col];
  }
  std::span<const std::uint8_t> row(std::size_t r) const noexcept {
    return std::span(pixels_).subspan(r * width_, width_);
  }

  PixelView view() const noexcept { return {pixels_, width_, height_}; }
  operator PixelView() const noexcept { return view(); }

  bool operator==(const ImageBuffer&) const = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

/// BT.601 luma, round half up: (299 R + 587 G + 114 B + 500) / 1000.
/// `rgb` holds width*height interleaved triplets.
ImageBuffer to_grayscale(std::span<const std::uint8_t> rgb, std::size_t width,
                         std::size_t height);

}  // namespace chaocrypt
