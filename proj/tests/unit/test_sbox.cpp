#include <array>
#include <numeric>

#include "chaocrypt/sbox.hpp"
#include "doctest.h"

using namespace chaocrypt;

TEST_CASE("forward table entries") {
  CHECK(sbox_forward(0) == 52);
  CHECK(sbox_forward(255) == 242);
  CHECK(sbox_forward(16) == 129);
}

TEST_CASE("inverse table entries") {
  CHECK(sbox_inverse(52) == 0);
  CHECK(sbox_inverse(242) == 255);
  for (int b = 0; b < 256; ++b) {
    const auto v = static_cast<std::uint8_t>(b);
    REQUIRE(sbox_inverse(sbox_forward(v)) == v);
    REQUIRE(sbox_forward(sbox_inverse(v)) == v);
  }
}

TEST_CASE("embedded table is a bijection") {
  const SboxReport r = validate_sbox();
  CHECK(r.is_bijective);
  CHECK(r.duplicate_values.empty());
  CHECK(r.missing_values.empty());
  CHECK(r.fixed_point_count == 0);
  static_assert(kSboxForward[0] == 52);
}

TEST_CASE("validation flags defects") {
  std::array<std::uint8_t, 256> dup{};
  std::iota(dup.begin(), dup.end(), 0);
  dup[1] = 0;
  const SboxReport bad = validate_sbox(dup);
  CHECK_FALSE(bad.is_bijective);
  REQUIRE(bad.duplicate_values.size() == 1);
  CHECK(bad.duplicate_values[0] == 0);
  REQUIRE(bad.missing_values.size() == 1);
  CHECK(bad.missing_values[0] == 1);

  std::array<std::uint8_t, 256> id{};
  std::iota(id.begin(), id.end(), 0);
  const SboxReport ident = validate_sbox(id);
  CHECK(ident.is_bijective);
  CHECK(ident.fixed_point_count == 256);
}

TEST_CASE("substitute and unsubstitute are inverse in place") {
  std::vector<std::uint8_t> data(1000);
  for (std::size_t i = 0; i < data.size(); ++i) data[i] = static_cast<std::uint8_t>(i * 37);
  const auto original = data;
  substitute(data);
  CHECK(data != original);
  unsubstitute(data);
  CHECK(data == original);
}
