#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "chaocrypt/image.hpp"

namespace chaocrypt {

enum class InputKind { Pgm, Png, Wav, Envelope, Unknown };

/// Classifies a file by its leading magic bytes.
InputKind sniff(std::span<const std::uint8_t> bytes);

/// PNG decoded to 8-bit grayscale; colour input goes through to_grayscale.
/// Throws Errc::MalformedImage.
ImageBuffer decode_png(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_png(const ImageBuffer& img);

/// PGM or PNG by content. Throws Errc::MalformedImage for anything else.
ImageBuffer decode_image(std::span<const std::uint8_t> bytes);

/// PNG when `path` ends in .png, PGM otherwise.
std::vector<std::uint8_t> encode_image_for(const std::filesystem::path& path,
                                           const ImageBuffer& img);

}  // namespace chaocrypt
