#include <cmath>
#include <numbers>
#include <random>

#include "chaocrypt/chaotic_maps.hpp"
#include "chaocrypt/error.hpp"
#include "chaocrypt/keying.hpp"
#include "doctest.h"
#include "mp_oracle.hpp"

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

}  // namespace

TEST_CASE("tdercs init from the seed") {
  TdErcs a(TdErcsSeed{0.0, 0.5, std::numbers::pi / 4, 2});
  CHECK(a.y() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(a.tangent_at(0) == 0.0);
  CHECK(a.slope() == doctest::Approx(-1.0).epsilon(1e-15));

  TdErcs b(TdErcsSeed{0.0, 0.9, std::numbers::pi / 3, 2});
  CHECK(b.y() == 0.9);

  CHECK(code_of([] { TdErcs(TdErcsSeed{1.0, 0.5, std::numbers::pi / 4, 2}); }) ==
        Errc::DegenerateSeed);
  CHECK(code_of([] { TdErcs(TdErcsSeed{-1.0, 0.5, 0.3, 2}); }) == Errc::DegenerateSeed);
}

TEST_CASE("tdercs seed domain") {
  CHECK(code_of([] { validate(TdErcsSeed{1.5, 0.5, 1.0, 2}); }) == Errc::InvalidParameter);
  CHECK(code_of([] { validate(TdErcsSeed{0.1, 1.0, 1.0, 2}); }) == Errc::InvalidParameter);
  CHECK(code_of([] { validate(TdErcsSeed{0.1, 0.0, 1.0, 2}); }) == Errc::InvalidParameter);
  CHECK(code_of([] { validate(TdErcsSeed{0.1, 0.5, std::numbers::pi, 2}); }) ==
        Errc::InvalidParameter);
  CHECK(code_of([] { validate(TdErcsSeed{0.1, 0.5, std::numbers::pi / 2, 2}); }) ==
        Errc::InvalidParameter);
  CHECK(code_of([] { validate(TdErcsSeed{0.1, 0.5, 1.0, 1}); }) == Errc::InvalidParameter);
  CHECK_NOTHROW(validate(TdErcsSeed{-1.0, 0.5, std::numbers::pi / 2 + 1e-9, 2}));
}

TEST_CASE("tdercs first step lands on the hand-solved chord intersection") {
  TdErcs map(TdErcsSeed{0.0, 0.5, std::numbers::pi / 4, 2});
  const double x1 = map.next();
  CHECK(x1 == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(map.y() == doctest::Approx(-0.3).epsilon(1e-14));
  CHECK(map.ellipse_residual() < 1e-12);
}

TEST_CASE("tdercs first 10 iterates match the 50-digit oracle") {
  const auto ref = oracle::tdercs_orbit(0.3, 0.7, 1.0, 3, 10);
  TdErcs map(TdErcsSeed{0.3, 0.7, 1.0, 3});
  for (std::size_t i = 1; i <= 10; ++i) {
    const double x = map.next();
    CHECK(std::abs(x - ref[i].x.convert_to<double>()) < 1e-10);
    CHECK(std::abs(map.y() - ref[i].y.convert_to<double>()) < 1e-10);
  }
}

TEST_CASE("tdercs delay rule switches from the previous point to point i-j") {
  TdErcs map(TdErcsSeed{0.2, 0.6, 0.9, 4});
  std::vector<double> tangents{map.tangent_at(0)};
  for (int i = 1; i <= 8; ++i) {
    map.next();
    tangents.push_back(-(map.x() / map.y()) * 0.36);
    CHECK(map.tangent_at(static_cast<std::uint64_t>(i)) == doctest::Approx(tangents.back()));
  }
  CHECK(code_of([&] { (void)map.tangent_at(0); }) == Errc::InvalidParameter);
}

TEST_CASE("tdercs stays on the ellipse over long orbits") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  for (int trial = 0; trial < 20; ++trial) {
    const double mu = u(rng);
    TdErcs map(TdErcsSeed{2.0 * u(rng) - 1.0, mu, 3.0 * u(rng), 2 + trial % 5});
    double worst = 0.0;
    for (int i = 0; i < 20000; ++i) {
      const double x = map.next();
      REQUIRE(x >= -1.0 - 1e-12);
      REQUIRE(x <= 1.0 + 1e-12);
      worst = std::max(worst, map.ellipse_residual());
    }
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("tdercs sensitivity to a 1e-10 change in x0") {
  TdErcs a(TdErcsSeed{0.3, 0.7, 1.0, 3});
  TdErcs b(TdErcsSeed{0.3 + 1e-10, 0.7, 1.0, 3});
  for (std::size_t i = 0; i < kDefaultBurnIn; ++i) {
    a.next();
    b.next();
  }
  bool diverged = false;
  for (int i = 0; i < 100 && !diverged; ++i) diverged = std::abs(a.next() - b.next()) > 0.1;
  CHECK(diverged);
}

TEST_CASE("nca step matches the closed form") {
  Nca map(0.3, NcaParams{1.0, 5.0});
  const double next = map.next();
  const double ref = oracle::nca_step(0.3, 1.0, 5.0).convert_to<double>();
  CHECK(std::abs(next - ref) < 1e-12);
}

TEST_CASE("nca iterates stay inside (0, 1)") {
  Nca map(0.47, NcaParams{1.2, 30.0});
  for (int i = 0; i < 1000; ++i) {
    const double v = map.next();
    REQUIRE(v > 0.0);
    REQUIRE(v < 1.0);
  }

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const NcaParams p{0.05 + 1.35 * u(rng), 5.0 + 38.6 * u(rng)};
    Nca m(0.01 + 0.98 * u(rng), p);
    for (int i = 0; i < 5000; ++i) {
      const double v = m.next();
      REQUIRE(v > 0.0);
      REQUIRE(v < 1.0);
    }
  }
}

TEST_CASE("nca parameter domain") {
  CHECK(code_of([] { Nca(0.5, NcaParams{1.5, 30}); }) == Errc::InvalidParameter);
  CHECK(code_of([] { Nca(0.5, NcaParams{1.0, 4.9}); }) == Errc::InvalidParameter);
  CHECK(code_of([] { Nca(0.5, NcaParams{1.0, 44}); }) == Errc::InvalidParameter);
  CHECK(code_of([] { Nca(0.0, NcaParams{1.0, 30}); }) == Errc::InvalidParameter);
  CHECK(code_of([] { Nca(1.0, NcaParams{1.0, 30}); }) == Errc::InvalidParameter);
  CHECK_NOTHROW(Nca(0.5, NcaParams{1.4, 43.6}));
}

TEST_CASE("chaotic_sequence is deterministic and burn-in drops a prefix") {
  const KeyMaterial key = key_from_user_secret("sequence");
  const auto a = chaotic_sequence(MapKind::Nca, key, 5, 0);
  const auto b = chaotic_sequence(MapKind::Nca, key, 5, 0);
  CHECK(a == b);

  const auto tail = chaotic_sequence(MapKind::Nca, key, 3, 2);
  CHECK(tail == std::vector<double>(a.begin() + 2, a.end()));

  const auto td = chaotic_sequence(MapKind::TdErcs, key, 512, 500);
  for (double v : td) {
    CHECK(v >= -1.0);
    CHECK(v <= 1.0);
  }
  CHECK(code_of([&] { (void)chaotic_sequence(MapKind::TdErcs, key, 0, 0); }) ==
        Errc::InvalidParameter);
}

TEST_CASE("permutation_from_sequence is a stable argsort") {
  const std::vector<double> v1{0.3, 0.1, 0.2};
  CHECK(permutation_from_sequence(v1) == Permutation({1, 2, 0}));

  const std::vector<double> ties{0.5, 0.5, 0.1};
  CHECK(permutation_from_sequence(ties) == Permutation({2, 0, 1}));

  std::vector<double> inc(37);
  for (std::size_t i = 0; i < inc.size(); ++i) inc[i] = static_cast<double>(i) * 0.25 - 3.0;
  CHECK(permutation_from_sequence(inc) == Permutation::identity(inc.size()));

  CHECK(code_of([] { (void)permutation_from_sequence(std::vector<double>{}); }) ==
        Errc::InvalidParameter);
}

TEST_CASE("permutations are bijections (property)") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> len(1, 300);
  std::uniform_int_distribution<int> coarse(0, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v(static_cast<std::size_t>(len(rng)));
    for (auto& x : v) x = coarse(rng) * 0.1;  // many ties
    const Permutation p = permutation_from_sequence(v);
    std::vector<bool> seen(v.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
      REQUIRE(p[i] < v.size());
      REQUIRE_FALSE(seen[p[i]]);
      seen[p[i]] = true;
      if (i > 0) {
        REQUIRE(v[p[i - 1]] <= v[p[i]]);
        if (v[p[i - 1]] == v[p[i]]) REQUIRE(p[i - 1] < p[i]);
      }
    }
    const Permutation inv = p.inverse();
    for (std::size_t i = 0; i < p.size(); ++i) REQUIRE(inv[p[i]] == i);
  }
}

TEST_CASE("permutation rejects non-bijections") {
  CHECK(code_of([] { Permutation({0, 0, 1}); }) == Errc::InvalidParameter);
  CHECK(code_of([] { Permutation({0, 3}); }) == Errc::InvalidParameter);
}
