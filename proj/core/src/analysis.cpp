#include "chaocrypt/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iterator>
#include <numeric>
#include <random>
#include <sstream>

#include "chaocrypt/error.hpp"
#include "json.hpp"

namespace chaocrypt {
namespace {

using nlohmann::json;

void require_same_shape(PixelView a, PixelView b) {
  if (a.width != b.width || a.height != b.height || a.size() != b.size())
    raise(Errc::DimensionMismatch, "images must have equal dimensions");
}

void require_nonempty(PixelView img) {
  if (img.size() == 0) raise(Errc::EmptyInput, "image has no pixels");
}

}  // namespace

Histogram histogram(PixelView img) {
  Histogram h{};
  for (auto p : img.pixels) ++h[p];
  return h;
}

double entropy(const Histogram& hist) {
  std::uint64_t n = 0;
  for (auto c : hist) n += c;
  if (n == 0) raise(Errc::EmptyInput, "histogram is empty");
  double e = 0.0;
  for (auto c : hist) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(n);
    e -= p * std::log2(p);
  }
  return e;
}

double entropy(PixelView img) {
  require_nonempty(img);
  return entropy(histogram(img));
}

double correlation(PixelView img, Direction dir, std::size_t sample_count, std::uint64_t seed) {
  const std::size_t dr = dir == Direction::Horizontal ? 0 : 1;
  const std::size_t dc = dir == Direction::Vertical ? 0 : 1;
  if (img.width < dc + 1 || img.height < dr + 1)
    raise(Errc::InvalidParameter, "image too small for the requested direction");
  const std::size_t cols = img.width - dc;
  const std::size_t rows = img.height - dr;
  const std::size_t available = rows * cols;

  std::vector<std::size_t> picks(available);
  std::iota(picks.begin(), picks.end(), std::size_t{0});
  if (sample_count < available) {
    // Partial Fisher-Yates: the first sample_count slots become a uniform
    // sample without replacement.
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < sample_count; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, available - 1);
      std::swap(picks[i], picks[pick(rng)]);
    }
    picks.resize(sample_count);
  }
  if (picks.empty()) raise(Errc::InvalidParameter, "no pixel pairs to correlate");

  std::vector<double> xs(picks.size()), ys(picks.size());
  for (std::size_t i = 0; i < picks.size(); ++i) {
    const std::size_t r = picks[i] / cols, c = picks[i] % cols;
    xs[i] = img.at(r, c);
    ys[i] = img.at(r + dr, c + dc);
  }
  const double n = static_cast<double>(picks.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0)
    raise(Errc::ZeroVariance, "correlation is undefined for constant pixel pairs");
  return sxy / std::sqrt(sxx * syy);
}

GlcmMetrics glcm_metrics(PixelView img, int levels) {
  if (levels < 2 || levels > 256) raise(Errc::InvalidParameter, "GLCM levels must be in [2, 256]");
  if (img.width < 2 || img.height < 1)
    raise(Errc::InvalidParameter, "GLCM needs at least one horizontal pixel pair");
  const auto L = static_cast<std::size_t>(levels);
  auto quantize = [L](std::uint8_t v) { return v * L / 256; };

  std::vector<std::uint64_t> counts(L * L, 0);
  for (std::size_t r = 0; r < img.height; ++r)
    for (std::size_t c = 0; c + 1 < img.width; ++c)
      ++counts[quantize(img.at(r, c)) * L + quantize(img.at(r, c + 1))];

  const double total = static_cast<double>(img.height * (img.width - 1));
  GlcmMetrics m;
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = 0; j < L; ++j) {
      const auto count = counts[i * L + j];
      if (count == 0) continue;
      const double p = static_cast<double>(count) / total;
      const double d = static_cast<double>(i) - static_cast<double>(j);
      m.contrast += p * d * d;
      m.energy += p * p;
      m.homogeneity += p / (1.0 + std::abs(d));
    }
  }
  return m;
}

double npcr(PixelView a, PixelView b) {
  require_same_shape(a, b);
  require_nonempty(a);
  std::size_t diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i) diff += a.pixels[i] != b.pixels[i];
  return 100.0 * static_cast<double>(diff) / static_cast<double>(a.size());
}

double uaci(PixelView a, PixelView b) {
  require_same_shape(a, b);
  require_nonempty(a);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    sum += std::abs(int{a.pixels[i]} - int{b.pixels[i]}) / 255.0;
  return 100.0 * sum / static_cast<double>(a.size());
}

double mse(PixelView a, PixelView b) {
  require_same_shape(a, b);
  require_nonempty(a);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = int{a.pixels[i]} - int{b.pixels[i]};
    sum += d * d;
  }
  return sum / static_cast<double>(a.size());
}

Psnr psnr(PixelView a, PixelView b) {
  const double m = mse(a, b);
  if (m == 0.0) return {0.0, true};
  return {10.0 * std::log10(255.0 * 255.0 / m), false};
}

ChiSquare chi_square(const Histogram& hist, double critical) {
  std::uint64_t n = 0;
  for (auto c : hist) n += c;
  if (n == 0) raise(Errc::EmptyInput, "histogram is empty");
  const double expected = static_cast<double>(n) / 256.0;
  ChiSquare out;
  for (auto c : hist) {
    const double d = static_cast<double>(c) - expected;
    out.statistic += d * d / expected;
  }
  out.pass = out.statistic < critical;
  return out;
}

ChiSquare chi_square(PixelView img, double critical) {
  require_nonempty(img);
  return chi_square(histogram(img), critical);
}

double key_sensitivity(const ImageBuffer& img, const KeyMaterial& key, std::size_t burn_in) {
  const KeyMaterial flipped = key_from_kappas(key.kappa1 ^ 1u, key.kappa2, key.params);
  return npcr(encrypt_with_key(img, key, burn_in), encrypt_with_key(img, flipped, burn_in));
}

double key_sensitivity(const ImageBuffer& img, const CipherConfig& cfg) {
  return key_sensitivity(img, resolve_key(img, cfg), cfg.burn_in);
}

DifferentialPair differential_pair(const ImageBuffer& plain, const MapParams& params,
                                   std::size_t burn_in, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, plain.size() - 1);
  const std::size_t index = pick(rng);

  ImageBuffer perturbed = plain;
  perturbed.pixels()[index] = static_cast<std::uint8_t>(perturbed.pixels()[index] + 1);

  const auto cfg = CipherConfig::plaintext_hash(params, burn_in);
  return {encrypt_with_key(plain, resolve_key(plain, cfg), burn_in),
          encrypt_with_key(perturbed, resolve_key(perturbed, cfg), burn_in), index};
}

ImageMetrics image_metrics(PixelView img, const AnalysisOptions& options) {
  auto cc = [&](Direction d) -> std::optional<double> {
    try {
      return correlation(img, d, options.correlation_samples, options.seed);
    } catch (const Error& e) {
      if (e.code() == Errc::ZeroVariance) return std::nullopt;
      throw;
    }
  };
  ImageMetrics m;
  m.h_cc = cc(Direction::Horizontal);
  m.v_cc = cc(Direction::Vertical);
  m.d_cc = cc(Direction::Diagonal);
  m.entropy = entropy(img);
  m.glcm = glcm_metrics(img, options.glcm_levels);
  m.chi = chi_square(img);
  return m;
}

MetricsReport full_report(const ImageBuffer& plain, const ImageBuffer& cipher,
                          const DifferentialPair& pair, double key_sens,
                          const AnalysisOptions& options) {
  MetricsReport r;
  r.options = options;
  r.plain = image_metrics(plain, options);
  r.cipher = image_metrics(cipher, options);
  r.npcr = npcr(pair.first, pair.second);
  r.uaci = uaci(pair.first, pair.second);
  r.key_sensitivity = key_sens;
  r.mse = mse(plain, cipher);
  r.psnr = psnr(plain, cipher);
  return r;
}

MetricsReport full_report(const ImageBuffer& plain, const CipherConfig& cfg,
                          const AnalysisOptions& options) {
  const KeyMaterial key = resolve_key(plain, cfg);
  const ImageBuffer cipher = encrypt_with_key(plain, key, cfg.burn_in);
  const DifferentialPair pair = differential_pair(plain, cfg.params, cfg.burn_in, options.seed);
  return full_report(plain, cipher, pair, key_sensitivity(plain, key, cfg.burn_in), options);
}

// --- Serialization ------------------------------------------------------------

namespace {

constexpr const char* kSchema = "chaocrypt.metrics/1";

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> read_optional(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

json column_json(const ImageMetrics& m) {
  return {{"h_cc", optional_number(m.h_cc)},
          {"v_cc", optional_number(m.v_cc)},
          {"d_cc", optional_number(m.d_cc)},
          {"entropy", m.entropy},
          {"contrast", m.glcm.contrast},
          {"energy", m.glcm.energy},
          {"homogeneity", m.glcm.homogeneity},
          {"chi_square", {{"statistic", m.chi.statistic}, {"dof", m.chi.dof}, {"pass", m.chi.pass}}}};
}

ImageMetrics column_from_json(const json& j) {
  ImageMetrics m;
  m.h_cc = read_optional(j.at("h_cc"));
  m.v_cc = read_optional(j.at("v_cc"));
  m.d_cc = read_optional(j.at("d_cc"));
  m.entropy = j.at("entropy").get<double>();
  m.glcm.contrast = j.at("contrast").get<double>();
  m.glcm.energy = j.at("energy").get<double>();
  m.glcm.homogeneity = j.at("homogeneity").get<double>();
  const auto& chi = j.at("chi_square");
  m.chi.statistic = chi.at("statistic").get<double>();
  m.chi.dof = chi.at("dof").get<int>();
  m.chi.pass = chi.at("pass").get<bool>();
  return m;
}

std::string fmt_optional(const std::optional<double>& v, int precision) {
  if (!v) return "undefined";
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << *v;
  return os.str();
}

std::string fmt(double v, int precision) { return fmt_optional(v, precision); }

}  // namespace

std::string report_to_json(const MetricsReport& r) {
  json j = {{"schema", kSchema},
            {"sampling_seed", r.options.seed},
            {"correlation_samples", r.options.correlation_samples},
            {"glcm_levels", r.options.glcm_levels},
            {"plain", column_json(r.plain)},
            {"cipher", column_json(r.cipher)},
            {"npcr", r.npcr},
            {"uaci", r.uaci},
            {"key_sensitivity", r.key_sensitivity},
            {"mse", r.mse},
            {"psnr", r.psnr.infinite ? json("inf") : json(r.psnr.decibels)}};
  return j.dump(2);
}

MetricsReport report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    if (j.at("schema").get<std::string>() != kSchema)
      raise(Errc::InvalidParameter, "unknown metrics schema");
    MetricsReport r;
    r.options.seed = j.at("sampling_seed").get<std::uint64_t>();
    r.options.correlation_samples = j.at("correlation_samples").get<std::size_t>();
    r.options.glcm_levels = j.at("glcm_levels").get<int>();
    r.plain = column_from_json(j.at("plain"));
    r.cipher = column_from_json(j.at("cipher"));
    r.npcr = j.at("npcr").get<double>();
    r.uaci = j.at("uaci").get<double>();
    r.key_sensitivity = j.at("key_sensitivity").get<double>();
    r.mse = j.at("mse").get<double>();
    const auto& p = j.at("psnr");
    if (p.is_string()) {
      if (p.get<std::string>() != "inf") raise(Errc::InvalidParameter, "bad psnr value");
      r.psnr = {0.0, true};
    } else {
      r.psnr = {p.get<double>(), false};
    }
    return r;
  } catch (const json::exception& e) {
    raise(Errc::InvalidParameter, std::string("malformed metrics JSON: ") + e.what());
  }
}

std::string report_csv_header() {
  return "label,plain_h_cc,plain_v_cc,plain_d_cc,plain_entropy,plain_contrast,plain_energy,"
         "plain_homogeneity,cipher_h_cc,cipher_v_cc,cipher_d_cc,cipher_entropy,cipher_contrast,"
         "cipher_energy,cipher_homogeneity,cipher_chi_square,cipher_chi_pass,npcr,uaci,"
         "key_sensitivity,mse,psnr";
}

std::string report_csv_row(const MetricsReport& r, const std::string& label) {
  std::ostringstream os;
  os << std::setprecision(10);
  auto opt = [&](const std::optional<double>& v) {
    if (v) os << *v;
  };
  os << label << ',';
  opt(r.plain.h_cc);
  os << ',';
  opt(r.plain.v_cc);
  os << ',';
  opt(r.plain.d_cc);
  os << ',' << r.plain.entropy << ',' << r.plain.glcm.contrast << ',' << r.plain.glcm.energy
     << ',' << r.plain.glcm.homogeneity << ',';
  opt(r.cipher.h_cc);
  os << ',';
  opt(r.cipher.v_cc);
  os << ',';
  opt(r.cipher.d_cc);
  os << ',' << r.cipher.entropy << ',' << r.cipher.glcm.contrast << ',' << r.cipher.glcm.energy
     << ',' << r.cipher.glcm.homogeneity << ',' << r.cipher.chi.statistic << ','
     << (r.cipher.chi.pass ? "pass" : "fail") << ',' << r.npcr << ',' << r.uaci << ','
     << r.key_sensitivity << ',' << r.mse << ',';
  if (r.psnr.infinite)
    os << "inf";
  else
    os << r.psnr.decibels;
  return os.str();
}

std::string report_text(const MetricsReport& r) {
  std::ostringstream os;
  auto row = [&](const std::string& name, const std::string& plain, const std::string& cipher) {
    os << std::left << std::setw(28) << name << std::setw(16) << plain << cipher << '\n';
  };
  row("Security parameter", "Plain", "Cipher");
  row("D_CC", fmt_optional(r.plain.d_cc, 4), fmt_optional(r.cipher.d_cc, 4));
  row("H_CC", fmt_optional(r.plain.h_cc, 4), fmt_optional(r.cipher.h_cc, 4));
  row("V_CC", fmt_optional(r.plain.v_cc, 4), fmt_optional(r.cipher.v_cc, 4));
  row("Entropy", fmt(r.plain.entropy, 4), fmt(r.cipher.entropy, 4));
  row("Contrast", fmt(r.plain.glcm.contrast, 4), fmt(r.cipher.glcm.contrast, 4));
  row("Energy", fmt(r.plain.glcm.energy, 4), fmt(r.cipher.glcm.energy, 4));
  row("Homogeneity", fmt(r.plain.glcm.homogeneity, 4), fmt(r.cipher.glcm.homogeneity, 4));
  row("Chi-square", fmt(r.plain.chi.statistic, 2),
      fmt(r.cipher.chi.statistic, 2) + (r.cipher.chi.pass ? " (pass)" : " (fail)"));
  row("NPCR", "N/A", fmt(r.npcr, 4));
  row("UACI", "N/A", fmt(r.uaci, 4));
  row("Key Sensitivity Difference", "N/A", fmt(r.key_sensitivity, 4));
  row("MSE", "N/A", fmt(r.mse, 2));
  row("PSNR (dB)", "N/A", r.psnr.infinite ? "inf" : fmt(r.psnr.decibels, 4));
  return os.str();
}

std::string histogram_text(const Histogram& hist) {
  std::ostringstream os;
  for (std::size_t v = 0; v < hist.size(); ++v) os << v << ' ' << hist[v] << '\n';
  return os.str();
}

}  // namespace chaocrypt
