#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace chaocrypt {

struct KeyMaterial;

/// Seed of the tangent-delay ellipse reflecting cavity map (TD-ERCS).
///
/// The orbit is a sequence of chord endpoints on the ellipse
/// mu^2 x^2 + y^2 = mu^2. `alpha` is the launch angle of the first chord and
/// `delay` selects which earlier reflection point supplies the tangent slope.
struct TdErcsSeed {
  double x0 = 0.0;     // [-1, 1], |x0| == 1 is degenerate
  double mu = 0.7;     // (0, 1)
  double alpha = 1.0;  // (0, pi), not within 1e-12 of pi/2
  int delay = 3;       // >= 2
};

/// Throws Errc::InvalidParameter when a field is outside its domain.
void validate(const TdErcsSeed& seed);

/// Iterator state of the TD-ERCS map. Single owner; copy to fork an orbit.
class TdErcs {
 public:
  /// Places the initial point at (x0, mu*sqrt(1 - x0^2)) and derives the
  /// initial chord slope from `alpha`. Throws Errc::DegenerateSeed for |x0| = 1.
  explicit TdErcs(const TdErcsSeed& seed);

  /// Advances one reflection and returns the new x coordinate, in [-1, 1].
  /// Throws Errc::NumericalDivergence if the point leaves the ellipse by more
  /// than 1e-6 or any quantity stops being finite.
  double next();

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }
  double slope() const noexcept { return slope_; }
  double mu() const noexcept { return mu_; }
  int delay() const noexcept { return static_cast<int>(tangents_.size()); }
  std::uint64_t iterations() const noexcept { return step_; }

  /// Tangent slope recorded for reflection point `index`; only the last
  /// `delay()` points are retained.
  double tangent_at(std::uint64_t index) const;

  /// |mu^2 x^2 + y^2 - mu^2| for the current point.
  double ellipse_residual() const noexcept;

 private:
  double mu_;
  double mu2_;
  double x_;
  double y_;
  double slope_;
  std::vector<double> tangents_;  // ring buffer indexed by point number mod delay
  std::uint64_t step_ = 0;
};

/// Control parameters of the non-linear chaotic algorithm (NCA) map.
struct NcaParams {
  double alpha = 1.2;  // (0, 1.4]
  double beta = 30.0;  // [5, 43.6]
};

void validate(const NcaParams& params);

/// x' = lambda * tan(alpha x) * (1 - x)^beta with
/// lambda = (1 - beta^-4) * cot(alpha / (1 + beta)) * (1 + 1/beta)^beta.
class Nca {
 public:
  /// `x0` must lie strictly inside (0, 1).
  Nca(double x0, const NcaParams& params);

  /// Returns the next iterate. Throws Errc::NumericalDivergence if it falls
  /// outside the open interval (0, 1); values are never clamped.
  double next();

  double x() const noexcept { return x_; }
  const NcaParams& params() const noexcept { return params_; }
  double gain() const noexcept { return gain_; }

 private:
  double x_;
  NcaParams params_;
  double gain_;
};

/// Configuration shared by both maps that is not derived from the hash.
struct MapParams {
  double mu = 0.7;
  double alpha = 1.0;
  int delay = 3;
  double alpha_nca = 1.2;
  double beta_nca = 30.0;

  NcaParams nca() const noexcept { return {alpha_nca, beta_nca}; }
  bool operator==(const MapParams&) const = default;
};

void validate(const MapParams& params);

inline constexpr std::size_t kDefaultBurnIn = 500;

enum class MapKind { TdErcs, Nca };

/// Builds the TD-ERCS iterator seeded by the key's TD-ERCS condition.
TdErcs make_tdercs(const KeyMaterial& key);
/// Builds the NCA iterator seeded by the key's NCA condition.
Nca make_nca(const KeyMaterial& key);

/// Discards `burn_in` iterates of the selected map, then collects `n`.
std::vector<double> chaotic_sequence(MapKind kind, const KeyMaterial& key,
                                     std::size_t n,
                                     std::size_t burn_in = kDefaultBurnIn);

/// A bijection on [0, n).
class Permutation {
 public:
  Permutation() = default;
  /// Throws Errc::InvalidParameter unless `indices` is a bijection on [0, n).
  explicit Permutation(std::vector<std::uint32_t> indices);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return indices_.size(); }
  std::uint32_t operator[](std::size_t i) const noexcept { return indices_[i]; }
  std::span<const std::uint32_t> indices() const noexcept { return indices_; }
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> indices_;
};

/// Stable argsort: values[p[0]] <= values[p[1]] <= ..., ties by index.
Permutation permutation_from_sequence(std::span<const double> values);

}  // namespace chaocrypt
