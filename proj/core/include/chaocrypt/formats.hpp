#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "chaocrypt/image.hpp"

namespace chaocrypt {

/// Whole-file read. Throws Errc::Io.
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over `path`, so a failed
/// write never leaves a partial file behind. Throws Errc::Io.
void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

/// Binary PGM (P5), maxval <= 255. Throws Errc::MalformedImage.
ImageBuffer decode_pgm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_pgm(const ImageBuffer& img);

struct WavAudio {
  std::uint32_t sample_rate = 16000;
  std::vector<std::int16_t> samples;

  bool operator==(const WavAudio&) const = default;
};

/// RIFF/WAVE, PCM format 1, mono, 16-bit. Throws Errc::MalformedAudio.
WavAudio decode_wav(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_wav(const WavAudio& audio);

}  // namespace chaocrypt
