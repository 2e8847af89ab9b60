#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "chaocrypt/cipher.hpp"

namespace chaocrypt {

/// Container layout (all integers little-endian, doubles as IEEE-754 binary64):
///
///   offset  size  field
///        0     4  magic "CHE1"
///        4     2  version (1)
///        6     1  payload kind (0 image, 1 audio)
///        7     1  key mode (0 plaintext hash, 1 user secret)
///        8     4  width
///       12     4  height
///       16     4  padding bytes (audio)
///       20     4  burn-in iterations
///       24     8  mu
///       32     8  alpha
///       40     4  tangent delay j
///       44     8  NCA alpha
///       52     8  NCA beta
///       60    24  kappa1 || kappa2 as ASCII hex (zero bytes in user-secret mode)
///       84     -  body, width * height bytes
inline constexpr std::size_t kEnvelopeHeaderSize = 84;
inline constexpr std::uint16_t kEnvelopeVersion = 1;

std::vector<std::uint8_t> serialize_envelope(const CipherEnvelope& env);

/// Throws Errc::BadMagic, Errc::LengthMismatch or Errc::InvalidParameter.
CipherEnvelope parse_envelope(std::span<const std::uint8_t> bytes);

}  // namespace chaocrypt
