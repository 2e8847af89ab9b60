#include "chaocrypt/envelope.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "chaocrypt/error.hpp"

namespace chaocrypt {
namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'C', 'H', 'E', '1'};
constexpr std::size_t kKappaHexSize = 24;

class Writer {
 public:
  explicit Writer(std::vector<std::uint8_t>& out) : out_(out) {}

  template <typename T>
  void uint(T v) {
    for (std::size_t i = 0; i < sizeof(T); ++i)
      out_.push_back(static_cast<std::uint8_t>(static_cast<std::uint64_t>(v) >> (8 * i)));
  }
  void f64(double v) { uint(std::bit_cast<std::uint64_t>(v)); }
  void bytes(std::span<const std::uint8_t> b) {
    for (auto v : b) out_.push_back(v);
  }

 private:
  std::vector<std::uint8_t>& out_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}

  template <typename T>
  T uint() {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) v |= std::uint64_t{in_[pos_ + i]} << (8 * i);
    pos_ += sizeof(T);
    return static_cast<T>(v);
  }
  double f64() { return std::bit_cast<double>(uint<std::uint64_t>()); }
  std::span<const std::uint8_t> bytes(std::size_t n) {
    auto s = in_.subspan(pos_, n);
    pos_ += n;
    return s;
  }

 private:
  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> serialize_envelope(const CipherEnvelope& env) {
  const auto& h = env.header;
  std::vector<std::uint8_t> out;
  out.reserve(kEnvelopeHeaderSize + env.body.size());
  Writer w(out);
  w.bytes(kMagic);
  w.uint(h.version);
  w.uint(static_cast<std::uint8_t>(h.payload));
  w.uint(static_cast<std::uint8_t>(h.key_mode));
  w.uint(h.width);
  w.uint(h.height);
  w.uint(h.padding);
  w.uint(h.burn_in);
  w.f64(h.params.mu);
  w.f64(h.params.alpha);
  w.uint(static_cast<std::uint32_t>(h.params.delay));
  w.f64(h.params.alpha_nca);
  w.f64(h.params.beta_nca);
  std::array<std::uint8_t, kKappaHexSize> kappa{};
  if (h.key_mode == KeyMode::PlaintextHash) {
    if (h.kappa_hex.size() != kKappaHexSize)
      raise(Errc::InvalidParameter, "plaintext-hash envelope needs a 24-character kappa field");
    std::copy(h.kappa_hex.begin(), h.kappa_hex.end(), kappa.begin());
  }
  w.bytes(kappa);
  w.bytes(env.body);
  return out;
}

CipherEnvelope parse_envelope(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kMagic.size() || !std::equal(kMagic.begin(), kMagic.end(), bytes.begin()))
    raise(Errc::BadMagic, "not a chaocrypt envelope (missing CHE1 magic)");
  if (bytes.size() < kEnvelopeHeaderSize)
    raise(Errc::LengthMismatch, "envelope header is truncated");

  Reader r(bytes);
  r.bytes(kMagic.size());
  CipherEnvelope env;
  auto& h = env.header;
  h.version = r.uint<std::uint16_t>();
  if (h.version != kEnvelopeVersion)
    raise(Errc::BadMagic, "unsupported envelope version " + std::to_string(h.version));
  const auto payload = r.uint<std::uint8_t>();
  const auto mode = r.uint<std::uint8_t>();
  if (payload > 1) raise(Errc::BadMagic, "unknown payload kind " + std::to_string(payload));
  if (mode > 1) raise(Errc::BadMagic, "unknown key mode " + std::to_string(mode));
  h.payload = static_cast<PayloadKind>(payload);
  h.key_mode = static_cast<KeyMode>(mode);
  h.width = r.uint<std::uint32_t>();
  h.height = r.uint<std::uint32_t>();
  h.padding = r.uint<std::uint32_t>();
  h.burn_in = r.uint<std::uint32_t>();
  h.params.mu = r.f64();
  h.params.alpha = r.f64();
  h.params.delay = static_cast<int>(r.uint<std::uint32_t>());
  h.params.alpha_nca = r.f64();
  h.params.beta_nca = r.f64();
  auto kappa = r.bytes(kKappaHexSize);
  if (h.key_mode == KeyMode::PlaintextHash) h.kappa_hex.assign(kappa.begin(), kappa.end());
  validate(h.params);

  const std::size_t expected = std::size_t{h.width} * h.height;
  if (h.width < 2 || h.height < 2)
    raise(Errc::LengthMismatch, "envelope declares an image smaller than 2x2");
  if (bytes.size() - kEnvelopeHeaderSize != expected)
    raise(Errc::LengthMismatch, "envelope body has " +
                                    std::to_string(bytes.size() - kEnvelopeHeaderSize) +
                                    " bytes, expected " + std::to_string(expected));
  auto body = bytes.subspan(kEnvelopeHeaderSize);
  env.body.assign(body.begin(), body.end());
  return env;
}

}  // namespace chaocrypt
