#include "chaocrypt/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace chaocrypt {

ImageBuffer make_test_image(std::size_t width, std::size_t height, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> noise(0.0, 2.5);

  struct Blob {
    double cx, cy, rx, ry, level;
  };
  std::vector<Blob> blobs(6);
  for (auto& b : blobs)
    b = {unit(rng), unit(rng), 0.08 + 0.2 * unit(rng), 0.08 + 0.2 * unit(rng),
         -70.0 + 140.0 * unit(rng)};
  const double phase = 2.0 * std::numbers::pi * unit(rng);

  std::vector<std::uint8_t> px(width * height);
  for (std::size_t r = 0; r < height; ++r) {
    const double v = static_cast<double>(r) / static_cast<double>(height);
    for (std::size_t c = 0; c < width; ++c) {
      const double u = static_cast<double>(c) / static_cast<double>(width);
      double value = 60.0 + 90.0 * u + 40.0 * v +
                     25.0 * std::sin(2.0 * std::numbers::pi * (1.3 * u + 0.7 * v) + phase);
      for (const auto& b : blobs) {
        const double d = std::hypot((u - b.cx) / b.rx, (v - b.cy) / b.ry);
        value += b.level / (1.0 + std::exp(12.0 * (d - 1.0)));
      }
      if (u > 0.55 && u < 0.85 && v > 0.1 && v < 0.35)
        value += 18.0 * std::sin(40.0 * u) * std::cos(35.0 * v);
      value += noise(rng);
      px[r * width + c] = static_cast<std::uint8_t>(std::clamp(std::lround(value), 0L, 255L));
    }
  }
  return ImageBuffer(width, height, std::move(px));
}

ImageBuffer make_random_image(std::size_t width, std::size_t height, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> px(width * height);
  for (auto& p : px) p = static_cast<std::uint8_t>(rng() & 0xFF);
  return ImageBuffer(width, height, std::move(px));
}

std::vector<std::int16_t> make_sine_audio(std::size_t frames, double frequency_hz,
                                          double sample_rate, double amplitude) {
  std::vector<std::int16_t> out(frames);
  for (std::size_t i = 0; i < frames; ++i)
    out[i] = static_cast<std::int16_t>(std::lround(
        amplitude * std::sin(2.0 * std::numbers::pi * frequency_hz * static_cast<double>(i) /
                             sample_rate)));
  return out;
}

}  // namespace chaocrypt
