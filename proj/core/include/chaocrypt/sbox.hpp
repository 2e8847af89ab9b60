#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace chaocrypt {
namespace sbox_detail {

// 16x16 table as published, one-based (values 1..256), row-major.
inline constexpr std::array<int, 256> kPrinted = {
     53,  75,  33, 114,   1, 230, 176, 255, 131,  90, 212, 109,  28, 152, 201, 183,
    130,  17,  80, 172, 256,  47,  10, 147,  85, 237, 105, 126, 180, 203, 214,  56,
     31, 231,  88, 211, 120, 132, 107, 169, 182,  49, 146, 208,  37,  14, 252,  77,
    193,  12, 164,  32,  52, 119, 185, 136, 219, 102,  45,  79, 250,  82, 238, 149,
    174, 223, 195,  87,  35, 160, 229,  74,  13, 242,  59, 140, 104,  22, 177, 121,
    228,  58, 189, 249, 205,  21, 158, 210,  44,  71, 175,   8, 134, 112, 115,  81,
      7,  99, 213, 232,  69, 202,  34,  29, 254, 156, 129,  84, 123, 191,  64, 166,
    248, 117,  98,  43,  18, 221,  76, 190, 151, 196,  96, 233, 161,  51, 138,  15,
     41, 141,  62, 150, 222, 178, 199, 108,  68,  24,   3, 251,  95, 122, 165, 240,
    125, 198, 159, 142, 239, 241,  83,  48, 170,   5, 184,  50, 215,  73,  27, 100,
    106, 153, 246,  61,  86,  11, 143, 225, 128, 163,  23, 181, 206,  36,  72, 220,
    224, 244,   9, 186, 137, 168,  54,  91,  97, 127,  78,  19, 157, 236,  39, 194,
     92, 192,  26,   4, 154,  67, 253, 197, 226,  46, 118, 167,  57, 209, 111, 139,
     70,  94, 135, 207, 103,  60, 216, 116,  25, 187, 245, 145, 227, 173,   2,  42,
    179,  40, 235, 101, 171,  89, 113,   6,  63, 144, 204, 218,  66, 247, 148,  30,
    155, 162, 124,  65, 188, 110,  20,  55, 200, 217, 234,  38,  16, 133,  93, 243,
};

constexpr std::array<std::uint8_t, 256> make_forward() {
  std::array<std::uint8_t, 256> t{};
  for (std::size_t i = 0; i < 256; ++i) t[i] = static_cast<std::uint8_t>(kPrinted[i] - 1);
  return t;
}

constexpr std::array<std::uint8_t, 256> make_inverse(const std::array<std::uint8_t, 256>& fwd) {
  std::array<std::uint8_t, 256> t{};
  for (std::size_t i = 0; i < 256; ++i) t[fwd[i]] = static_cast<std::uint8_t>(i);
  return t;
}

}  // namespace sbox_detail

inline constexpr std::array<std::uint8_t, 256> kSboxForward = sbox_detail::make_forward();
inline constexpr std::array<std::uint8_t, 256> kSboxInverse =
    sbox_detail::make_inverse(kSboxForward);

constexpr std::uint8_t sbox_forward(std::uint8_t b) noexcept { return kSboxForward[b]; }
constexpr std::uint8_t sbox_inverse(std::uint8_t b) noexcept { return kSboxInverse[b]; }

struct SboxReport {
  bool is_bijective = false;
  std::vector<std::uint8_t> duplicate_values;
  std::vector<std::uint8_t> missing_values;
  int fixed_point_count = 0;
};

SboxReport validate_sbox(std::span<const std::uint8_t, 256> table);
/// Report for the embedded table.
SboxReport validate_sbox();

/// Applies the forward or inverse table in place.
void substitute(std::span<std::uint8_t> bytes) noexcept;
void unsubstitute(std::span<std::uint8_t> bytes) noexcept;

}  // namespace chaocrypt
