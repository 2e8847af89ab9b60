#include "chaocrypt/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chaocrypt/analysis.hpp"
#include "chaocrypt/bench.hpp"
#include "chaocrypt/cipher.hpp"
#include "chaocrypt/envelope.hpp"
#include "chaocrypt/error.hpp"
#include "chaocrypt/formats.hpp"
#include "chaocrypt/image_io.hpp"
#include "chaocrypt/sbox.hpp"
#include "json.hpp"

namespace chaocrypt::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct KeyOptions {
  std::optional<std::string> secret;
  bool plaintext_hash = false;
  MapParams params;
  std::size_t burn_in = kDefaultBurnIn;
};

struct Options {
  std::string input, output;
  KeyOptions key;
  std::uint32_t rate = 16000;

  std::string plain, cipher, format = "json", histogram_out;
  std::optional<std::uint64_t> seed;
  std::size_t samples = kDefaultCorrelationSamples;
  int glcm_levels = 256;

  std::size_t trials = 30, warmup = 5, frame_size = 512;
  std::vector<std::string> payloads;
  std::string scheme = "all";
};

void add_key_flags(CLI::App* cmd, KeyOptions& k) {
  auto* secret = cmd->add_option("--secret", k.secret, "Key from a user secret");
  auto* hash = cmd->add_flag("--plaintext-hash", k.plaintext_hash,
                             "Key from the SHA-512 of the plaintext (default)");
  secret->excludes(hash);
  cmd->add_option("--mu", k.params.mu, "Ellipse parameter, (0, 1)");
  cmd->add_option("--alpha", k.params.alpha, "Initial chord angle, (0, pi)");
  cmd->add_option("--delay", k.params.delay, "Tangent delay, 2..20");
  cmd->add_option("--alpha-nca", k.params.alpha_nca, "NCA alpha, (0, 1.4]");
  cmd->add_option("--beta-nca", k.params.beta_nca, "NCA beta, [5, 43.6]");
  cmd->add_option("--burn-in", k.burn_in, "Discarded iterates per map");
}

CipherConfig make_config(const KeyOptions& k) {
  CipherConfig cfg = k.secret ? CipherConfig::user_secret(*k.secret, k.params, k.burn_in)
                              : CipherConfig::plaintext_hash(k.params, k.burn_in);
  cfg.validate();
  return cfg;
}

std::optional<std::string_view> secret_view(const KeyOptions& k) {
  if (k.secret) return std::string_view(*k.secret);
  return std::nullopt;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  write_file_atomic(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()),
                                    text.size()));
}

void check_format(const std::string& format) {
  if (format != "json" && format != "csv" && format != "text")
    raise(Errc::InvalidParameter, "--format must be json, csv or text");
}

int do_encrypt(const Options& o) {
  const CipherConfig cfg = make_config(o.key);
  const auto bytes = read_file(o.input);
  CipherEnvelope env;
  if (sniff(bytes) == InputKind::Wav) {
    env = encrypt_audio(decode_wav(bytes).samples, cfg);
  } else {
    env = encrypt_image(decode_image(bytes), cfg);
  }
  write_file_atomic(o.output, serialize_envelope(env));
  return kOk;
}

int do_decrypt(const Options& o) {
  const CipherEnvelope env = parse_envelope(read_file(o.input));
  if (env.header.payload == PayloadKind::Audio) {
    WavAudio wav;
    wav.sample_rate = o.rate;
    wav.samples = decrypt_audio(env, secret_view(o.key));
    write_file_atomic(o.output, encode_wav(wav));
  } else {
    const fs::path out(o.output);
    write_file_atomic(out, encode_image_for(out, decrypt_image(env, secret_view(o.key))));
  }
  return kOk;
}

struct PlainInput {
  ImageBuffer matrix;
  std::optional<std::vector<std::int16_t>> audio;
};

PlainInput read_plain(const std::string& path) {
  const auto bytes = read_file(path);
  if (sniff(bytes) == InputKind::Wav) {
    auto samples = decode_wav(bytes).samples;
    ImageBuffer m = shape_audio(samples);
    return {std::move(m), std::move(samples)};
  }
  return {decode_image(bytes), std::nullopt};
}

KeyMaterial envelope_key(const CipherEnvelope& env, const KeyOptions& k) {
  if (env.header.key_mode == KeyMode::PlaintextHash)
    return key_from_kappa_hex(env.header.kappa_hex, env.header.params);
  if (!k.secret) raise(Errc::KeyUnavailable, "the cipher was keyed by a secret; pass --secret");
  return key_from_user_secret(*k.secret, env.header.params);
}

std::uint64_t sampling_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  const char* env = std::getenv("CHAOCRYPT_SEED");
  if (!env) return kDefaultSamplingSeed;
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(env, &used);
    if (used == std::string_view(env).size()) return v;
  } catch (const std::exception&) {
  }
  raise(Errc::InvalidParameter, "CHAOCRYPT_SEED must be an unsigned integer");
}

int do_analyze(const Options& o, std::ostream& out) {
  check_format(o.format);
  AnalysisOptions opts;
  opts.seed = sampling_seed(o.seed);
  opts.correlation_samples = o.samples;
  opts.glcm_levels = o.glcm_levels;
  if (opts.glcm_levels < 2 || opts.glcm_levels > 256)
    raise(Errc::InvalidParameter, "--glcm-levels must be in 2..256");
  if (opts.correlation_samples == 0) raise(Errc::InvalidParameter, "--samples must be positive");

  const PlainInput plain = read_plain(o.plain);
  CipherEnvelope env;
  if (o.cipher.empty()) {
    const CipherConfig cfg = make_config(o.key);
    env = plain.audio ? encrypt_audio(*plain.audio, cfg) : encrypt_image(plain.matrix, cfg);
  } else {
    env = parse_envelope(read_file(o.cipher));
  }
  const ImageBuffer cipher = env.cipher_image();
  if (cipher.width() != plain.matrix.width() || cipher.height() != plain.matrix.height())
    raise(Errc::DimensionMismatch, "plain and cipher dimensions differ");

  const double ks = key_sensitivity(plain.matrix, envelope_key(env, o.key), env.header.burn_in);
  const DifferentialPair pair =
      differential_pair(plain.matrix, env.header.params, env.header.burn_in, opts.seed);
  const MetricsReport report = full_report(plain.matrix, cipher, pair, ks, opts);

  std::string text;
  if (o.format == "json") {
    text = report_to_json(report) + "\n";
  } else if (o.format == "csv") {
    text = report_csv_header() + "\n" +
           report_csv_row(report, fs::path(o.plain).filename().string()) + "\n";
  } else {
    text = report_text(report);
  }
  if (!o.histogram_out.empty()) emit(o.histogram_out, histogram_text(histogram(cipher)), out);
  emit(o.output, text, out);
  return kOk;
}

int do_bench(const Options& o, std::ostream& out, std::ostream& err) {
  check_format(o.format);
  if (o.scheme != "all" && o.scheme != "chaos" && o.scheme != "aes")
    raise(Errc::InvalidParameter, "--scheme must be chaos, aes or all");
  if (o.frame_size < 2) raise(Errc::InvalidParameter, "--size must be at least 2");
  BenchOptions bo;
  bo.trials = o.trials;
  bo.warmup = o.warmup;
  if (bo.trials < 30) raise(Errc::InvalidParameter, "--trials must be at least 30");

  std::vector<Payload> payloads;
  if (o.payloads.empty()) {
    payloads = standard_payloads(o.frame_size);
  } else {
    for (const auto& name : o.payloads) payloads.push_back(standard_payload(name, o.frame_size));
  }
  if (!pin_to_single_cpu()) err << "chaocrypt: note: could not pin to a single CPU\n";

  const CipherConfig cfg = make_config(o.key);
  std::vector<BenchResult> results;
  for (const auto& p : payloads) {
    if (o.scheme != "aes") results.push_back(bench_chaos(p, cfg, bo));
    if (o.scheme != "chaos") results.push_back(bench_aes_baseline(p, bo));
  }
  const ComparisonTable table = compare_report(results);
  std::string text;
  if (o.format == "json") {
    text = comparison_json(table) + "\n";
  } else if (o.format == "csv") {
    text = comparison_csv(table);
  } else {
    text = comparison_text(table);
  }
  emit(o.output, text, out);
  return kOk;
}

int do_sbox_check(const Options& o, std::ostream& out) {
  check_format(o.format);
  const SboxReport rep = validate_sbox();
  bool round_trip = true;
  for (int v = 0; v < 256; ++v) {
    const auto b = static_cast<std::uint8_t>(v);
    round_trip = round_trip && sbox_inverse(sbox_forward(b)) == b;
  }
  std::string text;
  if (o.format == "json") {
    json j;
    j["bijective"] = rep.is_bijective;
    j["inverse_round_trip"] = round_trip;
    j["duplicate_values"] = rep.duplicate_values;
    j["missing_values"] = rep.missing_values;
    j["fixed_points"] = rep.fixed_point_count;
    text = j.dump(2) + "\n";
  } else if (o.format == "csv") {
    text = "bijective,inverse_round_trip,duplicates,missing,fixed_points\n" +
           std::to_string(rep.is_bijective) + "," + std::to_string(round_trip) + "," +
           std::to_string(rep.duplicate_values.size()) + "," +
           std::to_string(rep.missing_values.size()) + "," +
           std::to_string(rep.fixed_point_count) + "\n";
  } else {
    text = std::string("bijective: ") + (rep.is_bijective ? "yes" : "no") +
           "\ninverse round trip: " + (round_trip ? "yes" : "no") +
           "\nfixed points: " + std::to_string(rep.fixed_point_count) + "\n";
  }
  emit(o.output, text, out);
  if (!rep.is_bijective || !round_trip) raise(Errc::InvalidParameter, "S-box is not a bijection");
  return kOk;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::InvalidParameter:
    case Errc::KeyUnavailable:
      return kValidation;
    case Errc::Io:
    case Errc::EmptyInput:
    case Errc::MalformedImage:
    case Errc::MalformedAudio:
    case Errc::BadMagic:
    case Errc::LengthMismatch:
      return kIo;
    default:
      return kFailure;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Chaos-based image and audio encryption", "chaocrypt"};
  app.require_subcommand(1);

  auto* enc = app.add_subcommand("encrypt", "Encrypt a PGM/PNG image or WAV clip");
  enc->add_option("--in", o.input, "Input file")->required();
  enc->add_option("--out", o.output, "Envelope output")->required();
  add_key_flags(enc, o.key);

  auto* dec = app.add_subcommand("decrypt", "Decrypt an envelope");
  dec->add_option("--in", o.input, "Envelope input")->required();
  dec->add_option("--out", o.output, "Image (.pgm/.png) or WAV output")->required();
  dec->add_option("--secret", o.key.secret, "Secret used at encryption");
  dec->add_option("--rate", o.rate, "Sample rate written to decrypted WAV")
      ->check(CLI::Range(1u, 1000000u));

  auto* ana = app.add_subcommand("analyze", "Security metrics of a plain/cipher pair");
  ana->add_option("--plain", o.plain, "Plain image or WAV")->required();
  ana->add_option("--cipher", o.cipher, "Envelope; encrypted on the fly when omitted");
  ana->add_option("--format", o.format, "json, csv or text");
  ana->add_option("--out", o.output, "Report file (stdout when omitted)");
  ana->add_option("--histogram", o.histogram_out, "Write the cipher histogram here");
  ana->add_option("--seed", o.seed, "Sampling seed (overrides CHAOCRYPT_SEED)");
  ana->add_option("--samples", o.samples, "Adjacent pairs per correlation");
  ana->add_option("--glcm-levels", o.glcm_levels, "Gray levels for the co-occurrence matrix");
  add_key_flags(ana, o.key);

  auto* ben = app.add_subcommand("bench", "Timing comparison against AES-128-CBC");
  ben->add_option("--trials", o.trials, "Timed trials per cell (>= 30)");
  ben->add_option("--warmup", o.warmup, "Untimed warm-up runs");
  ben->add_option("--payload", o.payloads, "image, batch75, audio512, audio38400");
  ben->add_option("--scheme", o.scheme, "chaos, aes or all");
  ben->add_option("--size", o.frame_size, "Side of the square image frames");
  ben->add_option("--format", o.format, "json, csv or text");
  ben->add_option("--out", o.output, "Report file (stdout when omitted)");
  add_key_flags(ben, o.key);

  auto* sbx = app.add_subcommand("sbox-check", "Verify the substitution table");
  sbx->add_option("--format", o.format, "json, csv or text");
  sbx->add_option("--out", o.output, "Report file (stdout when omitted)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "chaocrypt: error[usage]: " << e.what() << "\n";
    return kValidation;
  }

  try {
    if (enc->parsed()) return do_encrypt(o);
    if (dec->parsed()) return do_decrypt(o);
    if (ana->parsed()) return do_analyze(o, out);
    if (ben->parsed()) return do_bench(o, out, err);
    return do_sbox_check(o, out);
  } catch (const Error& e) {
    err << "chaocrypt: error[" << errc_name(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "chaocrypt: error[internal]: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace chaocrypt::cli
