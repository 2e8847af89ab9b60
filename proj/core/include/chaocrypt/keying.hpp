#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "chaocrypt/chaotic_maps.hpp"

namespace chaocrypt {

/// Initial conditions for both maps plus the configured map parameters.
///
/// kappa1/kappa2 are the 48-bit integers read from hex characters 1-12 and
/// 13-24 of a SHA-512 digest. The map conditions are kappa / 2^48, except that
/// a zero kappa is treated as 1 so neither map starts on a fixed point.
struct KeyMaterial {
  std::uint64_t kappa1 = 0;
  std::uint64_t kappa2 = 0;
  double y0 = 0.0;      // TD-ERCS starting abscissa, in [2^-48, 1)
  double x0_nca = 0.0;  // NCA starting value, in [2^-48, 1)
  MapParams params;
  /// Digest the kappas were read from: the full 128 hex characters, or just
  /// the 24-character kappa prefix when restored from an envelope header.
  std::string digest_hex;

  /// The 24 lowercase hex characters encoding kappa1 || kappa2.
  std::string kappa_hex() const;
};

inline constexpr std::uint64_t kKappaModulus = std::uint64_t{1} << 48;

/// Lowercase hex SHA-512 of `data`. Throws Errc::EmptyInput for empty data.
std::string hash_plaintext(std::span<const std::uint8_t> data);

/// Reads kappa1 from digest characters [0, 12) and kappa2 from [12, 24).
/// Throws Errc::MalformedDigest unless `digest_hex` is 128 hex characters.
KeyMaterial derive_key(std::string_view digest_hex, const MapParams& params = {});

/// Same as derive_key(hash_plaintext(secret)). Throws Errc::EmptyInput.
KeyMaterial key_from_user_secret(std::span<const std::uint8_t> secret,
                                 const MapParams& params = {});
KeyMaterial key_from_user_secret(std::string_view secret, const MapParams& params = {});

/// Rebuilds key material from explicit kappas (each must be < 2^48).
KeyMaterial key_from_kappas(std::uint64_t kappa1, std::uint64_t kappa2,
                            const MapParams& params = {});

/// Parses the 24-character kappa1 || kappa2 prefix. Throws Errc::MalformedDigest.
KeyMaterial key_from_kappa_hex(std::string_view kappa_hex, const MapParams& params = {});

}  // namespace chaocrypt
