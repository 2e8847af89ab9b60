#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chaocrypt/chaotic_maps.hpp"
#include "chaocrypt/image.hpp"
#include "chaocrypt/keying.hpp"

namespace chaocrypt {

enum class KeyMode : std::uint8_t { PlaintextHash = 0, UserSecret = 1 };
enum class PayloadKind : std::uint8_t { Image = 0, Audio = 1 };

struct CipherConfig {
  KeyMode key_mode = KeyMode::PlaintextHash;
  std::optional<std::string> secret;  // present iff key_mode == UserSecret
  MapParams params;
  std::size_t burn_in = kDefaultBurnIn;

  static CipherConfig plaintext_hash(const MapParams& params = {},
                                     std::size_t burn_in = kDefaultBurnIn);
  static CipherConfig user_secret(std::string secret, const MapParams& params = {},
                                  std::size_t burn_in = kDefaultBurnIn);

  /// Throws Errc::InvalidParameter on inconsistent mode/secret or bad params.
  void validate() const;
};

struct EnvelopeHeader {
  std::uint16_t version = 1;
  PayloadKind payload = PayloadKind::Image;
  KeyMode key_mode = KeyMode::PlaintextHash;
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint32_t padding = 0;  // trailing zero bytes added when shaping audio
  std::uint32_t burn_in = 0;
  MapParams params;
  std::string kappa_hex;  // 24 hex chars in PlaintextHash mode, empty otherwise

  bool operator==(const EnvelopeHeader&) const = default;
};

struct CipherEnvelope {
  EnvelopeHeader header;
  std::vector<std::uint8_t> body;

  /// Ciphertext body viewed as an image (width x height).
  ImageBuffer cipher_image() const;
  bool operator==(const CipherEnvelope&) const = default;
};

// --- Pipeline stages ---------------------------------------------------------

/// Output row r is input row p[r]. Throws Errc::DimensionMismatch.
ImageBuffer permute_rows(const ImageBuffer& img, const Permutation& p);
/// Output column c is input column p[c]. Throws Errc::DimensionMismatch.
ImageBuffer permute_cols(const ImageBuffer& img, const Permutation& p);

/// floor(mod(gamma * 1e14, 256)) with a floored (non-negative) modulus.
std::uint8_t keystream_byte(double gamma) noexcept;

/// Keystream bytes from the TD-ERCS orbit after `burn_in` discarded iterates.
std::vector<std::uint8_t> generate_keystream(const KeyMaterial& key, std::size_t n,
                                             std::size_t burn_in = kDefaultBurnIn);

/// out[i] = img[i] ^ keystream[i]. Throws Errc::LengthMismatch.
ImageBuffer xor_diffuse(const ImageBuffer& img, std::span<const std::uint8_t> keystream);

/// Everything the key determines for an A x B image.
struct Schedule {
  Permutation rows;
  Permutation cols;
  std::vector<std::uint8_t> keystream;
};

/// TD-ERCS: burn-in, A draws for the row permutation, then A*B keystream
/// values continuing the same orbit. NCA: burn-in, B draws for the columns.
Schedule make_schedule(const KeyMaterial& key, std::size_t height, std::size_t width,
                       std::size_t burn_in = kDefaultBurnIn);

/// Rows, columns, XOR, S-box under explicit key material.
ImageBuffer encrypt_with_key(const ImageBuffer& img, const KeyMaterial& key,
                             std::size_t burn_in = kDefaultBurnIn);
/// Exact inverse of encrypt_with_key.
ImageBuffer decrypt_with_key(const ImageBuffer& cipher, const KeyMaterial& key,
                             std::size_t burn_in = kDefaultBurnIn);

/// Key material for `img` under `cfg` (digest of the pixels or of the secret).
KeyMaterial resolve_key(const ImageBuffer& img, const CipherConfig& cfg);

CipherEnvelope encrypt_image(const ImageBuffer& img, const CipherConfig& cfg);

/// `secret` is required for UserSecret envelopes (Errc::KeyUnavailable).
ImageBuffer decrypt_image(const CipherEnvelope& env,
                          std::optional<std::string_view> secret = std::nullopt);

// --- Audio ------------------------------------------------------------------

struct AudioShape {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t padding = 0;
};

/// rows = max(2, floor(sqrt(n))), cols = max(2, ceil(n / rows)).
AudioShape audio_shape(std::size_t byte_count);

/// Little-endian bytes of the samples, zero-padded into a matrix.
ImageBuffer shape_audio(std::span<const std::int16_t> samples);

CipherEnvelope encrypt_audio(std::span<const std::int16_t> samples, const CipherConfig& cfg);
std::vector<std::int16_t> decrypt_audio(const CipherEnvelope& env,
                                        std::optional<std::string_view> secret = std::nullopt);

}  // namespace chaocrypt
