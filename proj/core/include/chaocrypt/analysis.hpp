#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "chaocrypt/cipher.hpp"
#include "chaocrypt/image.hpp"

namespace chaocrypt {

inline constexpr std::uint64_t kDefaultSamplingSeed = 42;
inline constexpr std::size_t kDefaultCorrelationSamples = 5000;
/// Upper critical values of chi-square with 255 degrees of freedom.
inline constexpr double kChiSquareCritical05 = 293.2478;
inline constexpr double kChiSquareCritical01 = 310.4574;

using Histogram = std::array<std::uint64_t, 256>;

Histogram histogram(PixelView img);

/// Shannon entropy of the gray-level histogram, in bits per pixel.
double entropy(PixelView img);
double entropy(const Histogram& hist);

enum class Direction { Horizontal, Vertical, Diagonal };

/// Pearson correlation of `sample_count` adjacent pixel pairs drawn without
/// replacement (all pairs when fewer exist). Throws Errc::ZeroVariance when
/// either side of the sampled pairs is constant.
double correlation(PixelView img, Direction dir,
                   std::size_t sample_count = kDefaultCorrelationSamples,
                   std::uint64_t seed = kDefaultSamplingSeed);

struct GlcmMetrics {
  double contrast = 0.0;
  double energy = 0.0;
  double homogeneity = 0.0;
};

/// Co-occurrence statistics of horizontally adjacent pixels (offset (0,1)),
/// not symmetrized. With `levels` < 256 gray values are quantized to
/// floor(v * levels / 256) first.
GlcmMetrics glcm_metrics(PixelView img, int levels = 256);

/// Percentage of positions that differ. Throws Errc::DimensionMismatch.
double npcr(PixelView a, PixelView b);
/// Mean absolute difference over 255, as a percentage.
double uaci(PixelView a, PixelView b);
double mse(PixelView a, PixelView b);

struct Psnr {
  double decibels = 0.0;
  bool infinite = false;  // identical inputs
};
Psnr psnr(PixelView a, PixelView b);

struct ChiSquare {
  double statistic = 0.0;
  int dof = 255;
  bool pass = false;
};
ChiSquare chi_square(const Histogram& hist, double critical = kChiSquareCritical05);
ChiSquare chi_square(PixelView img, double critical = kChiSquareCritical05);

/// NPCR between encryptions under the resolved key and the same key with the
/// lowest bit of kappa1 flipped.
double key_sensitivity(const ImageBuffer& img, const KeyMaterial& key,
                       std::size_t burn_in = kDefaultBurnIn);
double key_sensitivity(const ImageBuffer& img, const CipherConfig& cfg);

/// Ciphertexts of `plain` and of `plain` with one random pixel incremented
/// (mod 256), both keyed from their own plaintext hash.
struct DifferentialPair {
  ImageBuffer first;
  ImageBuffer second;
  std::size_t changed_index = 0;
};
DifferentialPair differential_pair(const ImageBuffer& plain, const MapParams& params = {},
                                   std::size_t burn_in = kDefaultBurnIn,
                                   std::uint64_t seed = kDefaultSamplingSeed);

struct AnalysisOptions {
  std::uint64_t seed = kDefaultSamplingSeed;
  std::size_t correlation_samples = kDefaultCorrelationSamples;
  int glcm_levels = 256;

  bool operator==(const AnalysisOptions&) const = default;
};

/// Per-image column of the report. Correlations are empty when undefined
/// (a constant image has no variance).
struct ImageMetrics {
  std::optional<double> h_cc;
  std::optional<double> v_cc;
  std::optional<double> d_cc;
  double entropy = 0.0;
  GlcmMetrics glcm;
  ChiSquare chi;
};

ImageMetrics image_metrics(PixelView img, const AnalysisOptions& options = {});

struct MetricsReport {
  ImageMetrics plain;
  ImageMetrics cipher;
  double npcr = 0.0;
  double uaci = 0.0;
  double key_sensitivity = 0.0;
  double mse = 0.0;  // plain vs cipher
  Psnr psnr;         // plain vs cipher
  AnalysisOptions options;
};

/// Aggregates precomputed inputs into the two-column report.
MetricsReport full_report(const ImageBuffer& plain, const ImageBuffer& cipher,
                          const DifferentialPair& pair, double key_sensitivity,
                          const AnalysisOptions& options = {});

/// Encrypts `plain` under `cfg` and evaluates everything.
MetricsReport full_report(const ImageBuffer& plain, const CipherConfig& cfg,
                          const AnalysisOptions& options = {});

std::string report_to_json(const MetricsReport& report);
/// Throws Errc::InvalidParameter on schema mismatch.
MetricsReport report_from_json(const std::string& json);

std::string report_csv_header();
std::string report_csv_row(const MetricsReport& report, const std::string& label);

/// Human-readable two-column table.
std::string report_text(const MetricsReport& report);

/// "value count" per line, 256 lines.
std::string histogram_text(const Histogram& hist);

}  // namespace chaocrypt
