#include "chaocrypt/keying.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <memory>

#include "chaocrypt/error.hpp"

namespace chaocrypt {
namespace {

constexpr std::size_t kDigestHexLength = 128;
constexpr std::size_t kKappaHexLength = 12;

bool is_hex(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isxdigit(static_cast<unsigned char>(c)) != 0; });
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::uint64_t parse_kappa(std::string_view hex) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), value, 16);
  if (ec != std::errc{} || ptr != hex.data() + hex.size())
    raise(Errc::MalformedDigest, "cannot parse kappa hex '" + std::string(hex) + "'");
  return value;
}

double condition(std::uint64_t kappa) {
  // Zero would seed both maps on a fixed point.
  return static_cast<double>(kappa == 0 ? 1 : kappa) / static_cast<double>(kKappaModulus);
}

}  // namespace

std::string KeyMaterial::kappa_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(2 * kKappaHexLength, '0');
  for (std::size_t i = 0; i < kKappaHexLength; ++i) {
    const auto shift = 4 * (kKappaHexLength - 1 - i);
    out[i] = kDigits[(kappa1 >> shift) & 0xF];
    out[kKappaHexLength + i] = kDigits[(kappa2 >> shift) & 0xF];
  }
  return out;
}

std::string hash_plaintext(std::span<const std::uint8_t> data) {
  if (data.empty()) raise(Errc::EmptyInput, "cannot hash an empty input");
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int md_len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &md_len, EVP_sha512(), nullptr) != 1 ||
      md_len != 64)
    raise(Errc::Io, "SHA-512 digest failed");

  static constexpr char kDigits[] = "0123456789abcdef";
  std::string hex(2 * md_len, '0');
  for (unsigned int i = 0; i < md_len; ++i) {
    hex[2 * i] = kDigits[md[i] >> 4];
    hex[2 * i + 1] = kDigits[md[i] & 0xF];
  }
  return hex;
}

KeyMaterial key_from_kappas(std::uint64_t kappa1, std::uint64_t kappa2, const MapParams& params) {
  if (kappa1 >= kKappaModulus || kappa2 >= kKappaModulus)
    raise(Errc::MalformedDigest, "kappa values must be below 2^48");
  validate(params);
  KeyMaterial key;
  key.kappa1 = kappa1;
  key.kappa2 = kappa2;
  key.y0 = condition(kappa1);
  key.x0_nca = condition(kappa2);
  key.params = params;
  key.digest_hex = key.kappa_hex();
  return key;
}

KeyMaterial key_from_kappa_hex(std::string_view kappa_hex, const MapParams& params) {
  if (kappa_hex.size() != 2 * kKappaHexLength || !is_hex(kappa_hex))
    raise(Errc::MalformedDigest, "kappa prefix must be 24 hex characters");
  return key_from_kappas(parse_kappa(kappa_hex.substr(0, kKappaHexLength)),
                         parse_kappa(kappa_hex.substr(kKappaHexLength)), params);
}

KeyMaterial derive_key(std::string_view digest_hex, const MapParams& params) {
  if (digest_hex.size() != kDigestHexLength || !is_hex(digest_hex))
    raise(Errc::MalformedDigest, "digest must be 128 hex characters");
  KeyMaterial key = key_from_kappa_hex(digest_hex.substr(0, 2 * kKappaHexLength), params);
  key.digest_hex = lower(digest_hex);
  return key;
}

KeyMaterial key_from_user_secret(std::span<const std::uint8_t> secret, const MapParams& params) {
  if (secret.empty()) raise(Errc::EmptyInput, "user secret must not be empty");
  return derive_key(hash_plaintext(secret), params);
}

KeyMaterial key_from_user_secret(std::string_view secret, const MapParams& params) {
  return key_from_user_secret(
      std::span(reinterpret_cast<const std::uint8_t*>(secret.data()), secret.size()), params);
}

}  // namespace chaocrypt
