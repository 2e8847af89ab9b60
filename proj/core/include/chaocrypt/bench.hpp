#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chaocrypt/cipher.hpp"
#include "chaocrypt/image.hpp"

namespace chaocrypt {

/// Pre-built input for a timing run. Either a list of image frames or one
/// audio clip; nothing is loaded or decoded inside the timed region.
struct Payload {
  std::string name;
  PayloadKind kind = PayloadKind::Image;
  std::vector<ImageBuffer> frames;
  std::vector<std::int16_t> audio;

  std::size_t byte_count() const;
  /// Serialized bytes per unit of work, as fed to byte-oriented baselines.
  std::vector<std::vector<std::uint8_t>> chunks() const;
};

Payload image_payload(std::string name, std::vector<ImageBuffer> frames);
Payload audio_payload(std::string name, std::vector<std::int16_t> samples);

/// The four standard payloads: one frame, a 75-frame batch, and audio clips
/// of 512 and 38400 frames. `frame_size` is the side of the square frames.
std::vector<Payload> standard_payloads(std::size_t frame_size = 512);
/// One of "image", "batch75", "audio512", "audio38400".
Payload standard_payload(const std::string& name, std::size_t frame_size = 512);

struct BenchOptions {
  std::size_t trials = 30;
  std::size_t warmup = 5;
  /// Monotonic clock in seconds; injectable for tests.
  std::function<double()> clock;
};

struct BenchResult {
  std::string scheme;
  std::string payload;
  std::size_t payload_bytes = 0;
  std::size_t trials = 0;
  double mean_seconds = 0.0;
  double variance_seconds2 = 0.0;  // unbiased sample variance
  std::vector<double> samples;
  bool hardware_aes = false;
};

/// Runs `work` warmup + trials times and keeps the timed trials.
/// Throws Errc::InvalidParameter for fewer than 30 trials.
BenchResult time_trials(const std::string& scheme, const Payload& payload,
                        const std::function<void()>& work, const BenchOptions& options);

/// Times keying plus the full encryption pipeline over every frame.
BenchResult bench_chaos(const Payload& payload, const CipherConfig& cfg,
                        const BenchOptions& options = {});

/// AES-128-CBC with PKCS#7 padding over the same bytes.
/// Throws Errc::BaselineUnavailable if the cipher cannot be initialised.
BenchResult bench_aes_baseline(const Payload& payload, const BenchOptions& options = {});

/// True when the CPU advertises AES instructions.
bool aes_hardware_accelerated();

/// Best effort: restricts the calling thread to a single CPU.
bool pin_to_single_cpu();

struct ComparisonTable {
  std::vector<std::string> schemes;   // row order
  std::vector<std::string> payloads;  // column order
  std::vector<BenchResult> results;

  const BenchResult* find(const std::string& scheme, const std::string& payload) const;
};

ComparisonTable compare_report(const std::vector<BenchResult>& results);

std::string comparison_text(const ComparisonTable& table);
std::string comparison_json(const ComparisonTable& table);
std::string comparison_csv(const ComparisonTable& table);
/// Throws Errc::InvalidParameter on malformed input.
ComparisonTable comparison_from_json(const std::string& json);

}  // namespace chaocrypt
