#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chaocrypt/image.hpp"

namespace chaocrypt {

/// Deterministic photo-like test frame: smooth shading, a few soft-edged
/// blobs, a textured patch and mild sensor noise. Neighbouring pixels are
/// strongly correlated, as in natural images.
ImageBuffer make_test_image(std::size_t width, std::size_t height, std::uint64_t seed = 1);

/// Uniformly random pixels.
ImageBuffer make_random_image(std::size_t width, std::size_t height, std::uint64_t seed);

/// 16-bit PCM sine tone.
std::vector<std::int16_t> make_sine_audio(std::size_t frames, double frequency_hz = 440.0,
                                          double sample_rate = 16000.0,
                                          double amplitude = 12000.0);

}  // namespace chaocrypt
