#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "chaocrypt/error.hpp"
#include "chaocrypt/keying.hpp"
#include "doctest.h"

using namespace chaocrypt;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected chaocrypt::Error");
  return Errc::Io;
}

std::span<const std::uint8_t> bytes(const std::string& s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

std::string digest_with_prefix(const std::string& prefix) {
  return prefix + std::string(128 - prefix.size(), 'a');
}

int hex_value(char c) { return c <= '9' ? c - '0' : c - 'a' + 10; }

}  // namespace

TEST_CASE("sha-512 published vectors") {
  const std::string abc = "abc";
  const std::string d = hash_plaintext(bytes(abc));
  CHECK(d.size() == 128);
  CHECK(d ==
        "ddaf35a193617abacc417349ae20413112e6fa4e89a97ea20a9eeee64b55d39a"
        "2192992a274fc1a836ba3c23a3feebbd454d4423643ce80e2a9ac94fa54ca49f");
  CHECK(hash_plaintext(bytes(abc)) == d);
  CHECK(code_of([] { (void)hash_plaintext(std::span<const std::uint8_t>{}); }) ==
        Errc::EmptyInput);
}

TEST_CASE("derive_key reads kappa1 and kappa2 from the first 24 hex characters") {
  const KeyMaterial zero = derive_key(digest_with_prefix("000000000000000000000001"));
  CHECK(zero.kappa1 == 0);
  CHECK(zero.y0 == std::ldexp(1.0, -48));
  CHECK(zero.kappa2 == 1);
  CHECK(zero.x0_nca == std::ldexp(1.0, -48));

  const KeyMaterial full = derive_key(digest_with_prefix("ffffffffffff000000000002"));
  CHECK(full.kappa1 == kKappaModulus - 1);
  CHECK(full.y0 == static_cast<double>(kKappaModulus - 1) / static_cast<double>(kKappaModulus));
  CHECK(full.y0 < 1.0);

  const KeyMaterial k200 = derive_key(digest_with_prefix("0000000000c8000000000003"));
  CHECK(k200.kappa1 == 200);
  CHECK(k200.y0 == 200.0 / static_cast<double>(kKappaModulus));
  CHECK(k200.kappa_hex() == "0000000000c8000000000003");

  CHECK(derive_key(digest_with_prefix("0000000000C8000000000003")).kappa1 == 200);
}

TEST_CASE("derive_key rejects malformed digests") {
  CHECK(code_of([] { (void)derive_key("abc"); }) == Errc::MalformedDigest);
  CHECK(code_of([] { (void)derive_key(std::string(128, 'g')); }) == Errc::MalformedDigest);
  CHECK(code_of([] { (void)derive_key(std::string(129, 'a')); }) == Errc::MalformedDigest);
  CHECK(code_of([] { (void)key_from_kappa_hex("12345"); }) == Errc::MalformedDigest);
}

TEST_CASE("derive_key carries validated map parameters") {
  MapParams p;
  p.mu = 0.4;
  CHECK(derive_key(digest_with_prefix("1"), p).params.mu == 0.4);
  p.mu = 1.5;
  CHECK(code_of([&] { (void)derive_key(digest_with_prefix("1"), p); }) ==
        Errc::InvalidParameter);
}

TEST_CASE("user secret keying") {
  const KeyMaterial a = key_from_user_secret("k");
  const KeyMaterial b = key_from_user_secret("k");
  CHECK(a.kappa1 == b.kappa1);
  CHECK(a.kappa2 == b.kappa2);
  CHECK(a.digest_hex == b.digest_hex);
  CHECK(key_from_user_secret("l").kappa1 != a.kappa1);
  CHECK(code_of([] { (void)key_from_user_secret(""); }) == Errc::EmptyInput);
}

TEST_CASE("conditions always lie in [2^-48, 1)") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    const KeyMaterial k = key_from_kappas(rng() % kKappaModulus, rng() % kKappaModulus);
    REQUIRE(k.y0 >= std::ldexp(1.0, -48));
    REQUIRE(k.y0 < 1.0);
    REQUIRE(k.x0_nca >= std::ldexp(1.0, -48));
    REQUIRE(k.x0_nca < 1.0);
    REQUIRE(key_from_kappa_hex(k.kappa_hex()).kappa1 == k.kappa1);
  }
  CHECK(code_of([] { (void)key_from_kappas(kKappaModulus, 0); }) == Errc::MalformedDigest);
}

TEST_CASE("single-bit input flips change about half the kappa bits") {
  std::mt19937_64 rng(9);
  double total = 0.0;
  const int trials = 100;
  for (int t = 0; t < trials; ++t) {
    std::vector<std::uint8_t> data(64);
    for (auto& b : data) b = static_cast<std::uint8_t>(rng());
    const std::string before = hash_plaintext(data);
    data[rng() % data.size()] ^= static_cast<std::uint8_t>(1u << (rng() % 8));
    const std::string after = hash_plaintext(data);
    int changed = 0;
    for (int i = 0; i < 24; ++i)
      changed += std::popcount(static_cast<unsigned>(hex_value(before[i]) ^ hex_value(after[i])));
    total += changed;
  }
  CHECK(total / trials >= 30.0);
}
