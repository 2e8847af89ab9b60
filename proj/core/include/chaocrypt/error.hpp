#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chaocrypt {

enum class Errc {
  InvalidParameter,
  DegenerateSeed,
  NumericalDivergence,
  EmptyInput,
  MalformedDigest,
  MalformedImage,
  MalformedAudio,
  DimensionMismatch,
  LengthMismatch,
  BadMagic,
  KeyUnavailable,
  ZeroVariance,
  BaselineUnavailable,
  Io,
};

/// Stable, greppable identifier such as "numerical-divergence".
std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& message);

}  // namespace chaocrypt
