#include "chaocrypt/sbox.hpp"

namespace chaocrypt {

SboxReport validate_sbox(std::span<const std::uint8_t, 256> table) {
  std::array<int, 256> counts{};
  SboxReport report;
  for (std::size_t i = 0; i < table.size(); ++i) {
    ++counts[table[i]];
    if (table[i] == i) ++report.fixed_point_count;
  }
  for (std::size_t v = 0; v < counts.size(); ++v) {
    if (counts[v] > 1) report.duplicate_values.push_back(static_cast<std::uint8_t>(v));
    if (counts[v] == 0) report.missing_values.push_back(static_cast<std::uint8_t>(v));
  }
  report.is_bijective = report.duplicate_values.empty() && report.missing_values.empty();
  return report;
}

SboxReport validate_sbox() { return validate_sbox(kSboxForward); }

void substitute(std::span<std::uint8_t> bytes) noexcept {
  for (auto& b : bytes) b = kSboxForward[b];
}

void unsubstitute(std::span<std::uint8_t> bytes) noexcept {
  for (auto& b : bytes) b = kSboxInverse[b];
}

}  // namespace chaocrypt
