#include "chaocrypt/error.hpp"

namespace chaocrypt {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidParameter: return "invalid-parameter";
    case Errc::DegenerateSeed: return "degenerate-seed";
    case Errc::NumericalDivergence: return "numerical-divergence";
    case Errc::EmptyInput: return "empty-input";
    case Errc::MalformedDigest: return "malformed-digest";
    case Errc::MalformedImage: return "malformed-image";
    case Errc::MalformedAudio: return "malformed-audio";
    case Errc::DimensionMismatch: return "dimension-mismatch";
    case Errc::LengthMismatch: return "length-mismatch";
    case Errc::BadMagic: return "bad-magic";
    case Errc::KeyUnavailable: return "key-unavailable";
    case Errc::ZeroVariance: return "zero-variance";
    case Errc::BaselineUnavailable: return "baseline-unavailable";
    case Errc::Io: return "io";
  }
  return "unknown";
}

void raise(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace chaocrypt
