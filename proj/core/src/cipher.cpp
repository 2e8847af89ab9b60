#include "chaocrypt/cipher.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "chaocrypt/error.hpp"
#include "chaocrypt/sbox.hpp"

namespace chaocrypt {
namespace {

std::uint32_t narrow_u32(std::size_t v, const char* what) {
  if (v > std::numeric_limits<std::uint32_t>::max())
    raise(Errc::InvalidParameter, std::string(what) + " does not fit the envelope header");
  return static_cast<std::uint32_t>(v);
}

std::vector<double> draw(auto& map, std::size_t n) {
  std::vector<double> out(n);
  for (auto& v : out) v = map.next();
  return out;
}

void burn(auto& map, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) map.next();
}

KeyMaterial envelope_key(const CipherEnvelope& env, std::optional<std::string_view> secret) {
  const auto& h = env.header;
  if (h.key_mode == KeyMode::PlaintextHash) {
    if (h.kappa_hex.empty())
      raise(Errc::KeyUnavailable, "plaintext-hash envelope carries no key material");
    return key_from_kappa_hex(h.kappa_hex, h.params);
  }
  if (!secret) raise(Errc::KeyUnavailable, "envelope was encrypted with a user secret");
  return key_from_user_secret(*secret, h.params);
}

}  // namespace

CipherConfig CipherConfig::plaintext_hash(const MapParams& params, std::size_t burn_in) {
  CipherConfig cfg;
  cfg.params = params;
  cfg.burn_in = burn_in;
  return cfg;
}

CipherConfig CipherConfig::user_secret(std::string secret, const MapParams& params,
                                       std::size_t burn_in) {
  CipherConfig cfg;
  cfg.key_mode = KeyMode::UserSecret;
  cfg.secret = std::move(secret);
  cfg.params = params;
  cfg.burn_in = burn_in;
  return cfg;
}

void CipherConfig::validate() const {
  if ((key_mode == KeyMode::UserSecret) != secret.has_value())
    raise(Errc::InvalidParameter, "a secret is required exactly when key mode is user-secret");
  if (secret && secret->empty()) raise(Errc::EmptyInput, "user secret must not be empty");
  chaocrypt::validate(params);
}

ImageBuffer CipherEnvelope::cipher_image() const {
  return ImageBuffer(header.width, header.height, body);
}

ImageBuffer permute_rows(const ImageBuffer& img, const Permutation& p) {
  if (p.size() != img.height())
    raise(Errc::DimensionMismatch, "row permutation length does not match image height");
  ImageBuffer out(img.width(), img.height());
  const std::size_t w = img.width();
  for (std::size_t r = 0; r < img.height(); ++r) {
    auto src = img.row(p[r]);
    std::copy(src.begin(), src.end(), out.pixels().begin() + static_cast<std::ptrdiff_t>(r * w));
  }
  return out;
}

ImageBuffer permute_cols(const ImageBuffer& img, const Permutation& p) {
  if (p.size() != img.width())
    raise(Errc::DimensionMismatch, "column permutation length does not match image width");
  ImageBuffer out(img.width(), img.height());
  for (std::size_t r = 0; r < img.height(); ++r)
    for (std::size_t c = 0; c < img.width(); ++c) out.at(r, c) = img.at(r, p[c]);
  return out;
}

std::uint8_t keystream_byte(double gamma) noexcept {
  const double v = gamma * 1e14;
  // Division by a power of two is exact, so this equals fmod(v, 256) without its slow path.
  double r = std::abs(v) < 0x1p53 ? v - 256.0 * std::trunc(v / 256.0) : std::fmod(v, 256.0);
  if (r < 0.0) r += 256.0;
  const double f = std::floor(r);
  // r + 256 can round up to 256 for residues within an ulp below zero.
  return f >= 255.0 ? std::uint8_t{255} : static_cast<std::uint8_t>(f);
}

std::vector<std::uint8_t> generate_keystream(const KeyMaterial& key, std::size_t n,
                                             std::size_t burn_in) {
  if (n == 0) raise(Errc::InvalidParameter, "keystream length must be >= 1");
  TdErcs map = make_tdercs(key);
  burn(map, burn_in);
  std::vector<std::uint8_t> out(n);
  for (auto& b : out) b = keystream_byte(map.next());
  return out;
}

ImageBuffer xor_diffuse(const ImageBuffer& img, std::span<const std::uint8_t> keystream) {
  if (keystream.size() != img.size())
    raise(Errc::LengthMismatch, "keystream length " + std::to_string(keystream.size()) +
                                    " does not match " + std::to_string(img.size()) + " pixels");
  ImageBuffer out = img;
  auto px = out.pixels();
  for (std::size_t i = 0; i < px.size(); ++i) px[i] ^= keystream[i];
  return out;
}

Schedule make_schedule(const KeyMaterial& key, std::size_t height, std::size_t width,
                       std::size_t burn_in) {
  Schedule s;

  TdErcs tdercs = make_tdercs(key);
  burn(tdercs, burn_in);
  s.rows = permutation_from_sequence(draw(tdercs, height));
  s.keystream.resize(height * width);
  for (auto& b : s.keystream) b = keystream_byte(tdercs.next());

  Nca nca = make_nca(key);
  burn(nca, burn_in);
  s.cols = permutation_from_sequence(draw(nca, width));
  return s;
}

ImageBuffer encrypt_with_key(const ImageBuffer& img, const KeyMaterial& key, std::size_t burn_in) {
  const Schedule s = make_schedule(key, img.height(), img.width(), burn_in);
  ImageBuffer out = xor_diffuse(permute_cols(permute_rows(img, s.rows), s.cols), s.keystream);
  substitute(out.pixels());
  return out;
}

ImageBuffer decrypt_with_key(const ImageBuffer& cipher, const KeyMaterial& key,
                             std::size_t burn_in) {
  const Schedule s = make_schedule(key, cipher.height(), cipher.width(), burn_in);
  ImageBuffer tmp = cipher;
  unsubstitute(tmp.pixels());
  tmp = xor_diffuse(tmp, s.keystream);
  return permute_rows(permute_cols(tmp, s.cols.inverse()), s.rows.inverse());
}

KeyMaterial resolve_key(const ImageBuffer& img, const CipherConfig& cfg) {
  cfg.validate();
  if (cfg.key_mode == KeyMode::UserSecret) return key_from_user_secret(*cfg.secret, cfg.params);
  return derive_key(hash_plaintext(img.pixels()), cfg.params);
}

CipherEnvelope encrypt_image(const ImageBuffer& img, const CipherConfig& cfg) {
  const KeyMaterial key = resolve_key(img, cfg);
  CipherEnvelope env;
  auto& h = env.header;
  h.payload = PayloadKind::Image;
  h.key_mode = cfg.key_mode;
  h.width = narrow_u32(img.width(), "width");
  h.height = narrow_u32(img.height(), "height");
  h.burn_in = narrow_u32(cfg.burn_in, "burn-in");
  h.params = cfg.params;
  if (cfg.key_mode == KeyMode::PlaintextHash) h.kappa_hex = key.kappa_hex();
  env.body = std::move(encrypt_with_key(img, key, cfg.burn_in)).release();
  return env;
}

ImageBuffer decrypt_image(const CipherEnvelope& env, std::optional<std::string_view> secret) {
  const auto& h = env.header;
  if (env.body.size() != std::size_t{h.width} * h.height)
    raise(Errc::LengthMismatch, "envelope body has " + std::to_string(env.body.size()) +
                                    " bytes, header declares " + std::to_string(h.width) + "x" +
                                    std::to_string(h.height));
  const KeyMaterial key = envelope_key(env, secret);
  return decrypt_with_key(env.cipher_image(), key, h.burn_in);
}

AudioShape audio_shape(std::size_t byte_count) {
  AudioShape s;
  s.rows = std::max<std::size_t>(2, static_cast<std::size_t>(
                                        std::floor(std::sqrt(static_cast<double>(byte_count)))));
  s.cols = std::max<std::size_t>(2, (byte_count + s.rows - 1) / s.rows);
  s.padding = s.rows * s.cols - byte_count;
  return s;
}

ImageBuffer shape_audio(std::span<const std::int16_t> samples) {
  if (samples.empty()) raise(Errc::EmptyInput, "audio payload has no frames");
  const std::size_t n = 2 * samples.size();
  const AudioShape shape = audio_shape(n);
  std::vector<std::uint8_t> bytes(shape.rows * shape.cols, 0);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto u = static_cast<std::uint16_t>(samples[i]);
    bytes[2 * i] = static_cast<std::uint8_t>(u & 0xFF);
    bytes[2 * i + 1] = static_cast<std::uint8_t>(u >> 8);
  }
  return ImageBuffer(shape.cols, shape.rows, std::move(bytes));
}

CipherEnvelope encrypt_audio(std::span<const std::int16_t> samples, const CipherConfig& cfg) {
  const ImageBuffer shaped = shape_audio(samples);
  CipherEnvelope env = encrypt_image(shaped, cfg);
  env.header.payload = PayloadKind::Audio;
  env.header.padding = narrow_u32(shaped.size() - 2 * samples.size(), "padding");
  return env;
}

std::vector<std::int16_t> decrypt_audio(const CipherEnvelope& env,
                                        std::optional<std::string_view> secret) {
  if (env.header.payload != PayloadKind::Audio)
    raise(Errc::MalformedAudio, "envelope does not hold an audio payload");
  const ImageBuffer plain = decrypt_image(env, secret);
  const auto bytes = plain.pixels();
  if (env.header.padding > bytes.size() || (bytes.size() - env.header.padding) % 2 != 0)
    raise(Errc::MalformedAudio, "audio padding is inconsistent with the body size");
  std::vector<std::int16_t> samples((bytes.size() - env.header.padding) / 2);
  for (std::size_t i = 0; i < samples.size(); ++i)
    samples[i] = static_cast<std::int16_t>(bytes[2 * i] | (bytes[2 * i + 1] << 8));
  return samples;
}

}  // namespace chaocrypt
