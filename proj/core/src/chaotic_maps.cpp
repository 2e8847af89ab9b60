#include "chaocrypt/chaotic_maps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "chaocrypt/error.hpp"
#include "chaocrypt/keying.hpp"

namespace chaocrypt {
namespace {

constexpr double kEllipseTolerance = 1e-6;
constexpr double kRightAngleGuard = 1e-12;

template <typename... Args>
[[noreturn]] void invalid(const Args&... parts) {
  std::ostringstream os;
  os.precision(17);
  (os << ... << parts);
  raise(Errc::InvalidParameter, os.str());
}

}  // namespace

void validate(const TdErcsSeed& seed) {
  if (!(seed.x0 >= -1.0 && seed.x0 <= 1.0)) invalid("x0 must be in [-1, 1], got ", seed.x0);
  if (!(seed.mu > 0.0 && seed.mu < 1.0)) invalid("mu must be in (0, 1), got ", seed.mu);
  if (!(seed.alpha > 0.0 && seed.alpha < std::numbers::pi))
    invalid("alpha must be in (0, pi), got ", seed.alpha);
  if (std::abs(seed.alpha - std::numbers::pi / 2) < kRightAngleGuard)
    invalid("alpha must not be within 1e-12 of pi/2, got ", seed.alpha);
  if (seed.delay < 2) invalid("tangent delay must be >= 2, got ", seed.delay);
}

TdErcs::TdErcs(const TdErcsSeed& seed) {
  validate(seed);
  mu_ = seed.mu;
  mu2_ = seed.mu * seed.mu;
  x_ = seed.x0;
  y_ = seed.mu * std::sqrt(1.0 - seed.x0 * seed.x0);
  if (y_ == 0.0) raise(Errc::DegenerateSeed, "TD-ERCS seed with |x0| = 1 has y0 = 0");

  const double tangent0 = -(x_ / y_) * mu2_;
  const double t = std::tan(seed.alpha);
  slope_ = -(t + tangent0) / (1.0 - tangent0 * t);
  if (!std::isfinite(slope_))
    raise(Errc::DegenerateSeed, "TD-ERCS launch angle is parallel to the tangent at x0");

  tangents_.assign(static_cast<std::size_t>(seed.delay), tangent0);
}

double TdErcs::next() {
  const std::uint64_t i = step_ + 1;
  const std::uint64_t d = tangents_.size();
  const double tangent = i < d ? tangents_[(i - 1) % d] : tangents_[(i - d) % d];

  const double k = slope_;
  const double k2 = k * k;
  // Second intersection of the chord through (x, y) with slope k.
  const double xn = -(2.0 * k * y_ + x_ * (mu2_ - k2)) / (mu2_ + k2);
  const double yn = k * (xn - x_) + y_;
  // Reflect the chord about the delayed tangent.
  const double t2 = tangent * tangent;
  const double kn = (2.0 * tangent - k + k * t2) / (1.0 + 2.0 * k * tangent - t2);
  const double tangent_n = -(xn / yn) * mu2_;

  x_ = xn;
  y_ = yn;
  slope_ = kn;
  tangents_[i % d] = tangent_n;
  step_ = i;

  if (!std::isfinite(xn) || !std::isfinite(yn) || !std::isfinite(kn) ||
      !std::isfinite(tangent_n) || ellipse_residual() > kEllipseTolerance) {
    std::ostringstream os;
    os << "TD-ERCS orbit left the ellipse at iteration " << i;
    raise(Errc::NumericalDivergence, os.str());
  }
  return xn;
}

double TdErcs::tangent_at(std::uint64_t index) const {
  const std::uint64_t d = tangents_.size();
  if (index > step_ || index + d <= step_) invalid("tangent for point ", index, " is not retained");
  return tangents_[index % d];
}

double TdErcs::ellipse_residual() const noexcept {
  return std::abs(mu2_ * x_ * x_ + y_ * y_ - mu2_);
}

void validate(const NcaParams& params) {
  if (!(params.alpha > 0.0 && params.alpha <= 1.4))
    invalid("NCA alpha must be in (0, 1.4], got ", params.alpha);
  if (!(params.beta >= 5.0 && params.beta <= 43.6))
    invalid("NCA beta must be in [5, 43.6], got ", params.beta);
}

Nca::Nca(double x0, const NcaParams& params) : x_(x0), params_(params) {
  validate(params);
  if (!(x0 > 0.0 && x0 < 1.0)) invalid("NCA x0 must be in (0, 1), got ", x0);
  const double a = params.alpha;
  const double b = params.beta;
  gain_ = (1.0 - std::pow(b, -4.0)) / std::tan(a / (1.0 + b)) * std::pow(1.0 + 1.0 / b, b);
}

double Nca::next() {
  const double v = gain_ * std::tan(params_.alpha * x_) * std::pow(1.0 - x_, params_.beta);
  if (!(v > 0.0 && v < 1.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "NCA iterate " << v << " left (0, 1) from x = " << x_;
    raise(Errc::NumericalDivergence, os.str());
  }
  x_ = v;
  return v;
}

void validate(const MapParams& params) {
  validate(TdErcsSeed{0.0, params.mu, params.alpha, params.delay});
  validate(params.nca());
}

TdErcs make_tdercs(const KeyMaterial& key) {
  return TdErcs(TdErcsSeed{key.y0, key.params.mu, key.params.alpha, key.params.delay});
}

Nca make_nca(const KeyMaterial& key) { return Nca(key.x0_nca, key.params.nca()); }

namespace {

template <typename Map>
std::vector<double> drain(Map map, std::size_t n, std::size_t burn_in) {
  for (std::size_t i = 0; i < burn_in; ++i) map.next();
  std::vector<double> out(n);
  for (auto& v : out) v = map.next();
  return out;
}

}  // namespace

std::vector<double> chaotic_sequence(MapKind kind, const KeyMaterial& key, std::size_t n,
                                     std::size_t burn_in) {
  if (n == 0) invalid("chaotic sequence length must be >= 1");
  switch (kind) {
    case MapKind::TdErcs: return drain(make_tdercs(key), n, burn_in);
    case MapKind::Nca: return drain(make_nca(key), n, burn_in);
  }
  invalid("unknown map kind");
}

Permutation::Permutation(std::vector<std::uint32_t> indices) : indices_(std::move(indices)) {
  std::vector<bool> seen(indices_.size(), false);
  for (auto v : indices_) {
    if (v >= indices_.size() || seen[v]) invalid("indices do not form a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0u);
  Permutation p;
  p.indices_ = std::move(idx);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.indices_.resize(indices_.size());
  for (std::size_t i = 0; i < indices_.size(); ++i)
    inv.indices_[indices_[i]] = static_cast<std::uint32_t>(i);
  return inv;
}

Permutation permutation_from_sequence(std::span<const double> values) {
  if (values.empty()) invalid("cannot build a permutation from an empty sequence");
  Permutation p = Permutation::identity(values.size());
  std::vector<std::uint32_t> idx(p.indices().begin(), p.indices().end());
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return values[a] < values[b]; });
  return Permutation(std::move(idx));
}

}  // namespace chaocrypt
