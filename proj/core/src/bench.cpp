#include "chaocrypt/bench.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <iomanip>
#include <memory>
#include <sstream>

#ifdef __linux__
#include <sched.h>
#endif

#include "chaocrypt/error.hpp"
#include "chaocrypt/synthetic.hpp"
#include "json.hpp"

namespace chaocrypt {
namespace {

using nlohmann::json;

constexpr const char* kChaosScheme = "chaos-tdercs-nca";
constexpr const char* kAesScheme = "AES-128-CBC";
constexpr std::size_t kMinTrials = 30;

double steady_seconds() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

struct CipherCtxDeleter {
  void operator()(EVP_CIPHER_CTX* ctx) const { EVP_CIPHER_CTX_free(ctx); }
};

}  // namespace

std::size_t Payload::byte_count() const {
  if (kind == PayloadKind::Audio) return 2 * audio.size();
  std::size_t n = 0;
  for (const auto& f : frames) n += f.size();
  return n;
}

std::vector<std::vector<std::uint8_t>> Payload::chunks() const {
  std::vector<std::vector<std::uint8_t>> out;
  if (kind == PayloadKind::Audio) {
    std::vector<std::uint8_t> bytes(2 * audio.size());
    for (std::size_t i = 0; i < audio.size(); ++i) {
      const auto u = static_cast<std::uint16_t>(audio[i]);
      bytes[2 * i] = static_cast<std::uint8_t>(u & 0xFF);
      bytes[2 * i + 1] = static_cast<std::uint8_t>(u >> 8);
    }
    out.push_back(std::move(bytes));
    return out;
  }
  for (const auto& f : frames) out.emplace_back(f.pixels().begin(), f.pixels().end());
  return out;
}

Payload image_payload(std::string name, std::vector<ImageBuffer> frames) {
  Payload p;
  p.name = std::move(name);
  p.kind = PayloadKind::Image;
  p.frames = std::move(frames);
  return p;
}

Payload audio_payload(std::string name, std::vector<std::int16_t> samples) {
  Payload p;
  p.name = std::move(name);
  p.kind = PayloadKind::Audio;
  p.audio = std::move(samples);
  return p;
}

Payload standard_payload(const std::string& name, std::size_t frame_size) {
  if (name == "image") return image_payload(name, {make_test_image(frame_size, frame_size, 1)});
  if (name == "batch75") {
    std::vector<ImageBuffer> frames;
    frames.reserve(75);
    for (std::uint64_t i = 0; i < 75; ++i)
      frames.push_back(make_test_image(frame_size, frame_size, 100 + i));
    return image_payload(name, std::move(frames));
  }
  if (name == "audio512") return audio_payload(name, make_sine_audio(512));
  if (name == "audio38400") return audio_payload(name, make_sine_audio(38400));
  raise(Errc::InvalidParameter, "unknown payload '" + name + "'");
}

std::vector<Payload> standard_payloads(std::size_t frame_size) {
  std::vector<Payload> out;
  for (const char* name : {"image", "batch75", "audio512", "audio38400"})
    out.push_back(standard_payload(name, frame_size));
  return out;
}

BenchResult time_trials(const std::string& scheme, const Payload& payload,
                        const std::function<void()>& work, const BenchOptions& options) {
  if (options.trials < kMinTrials)
    raise(Errc::InvalidParameter, "at least 30 trials are required, got " +
                                      std::to_string(options.trials));
  const auto clock = options.clock ? options.clock : std::function<double()>(steady_seconds);
  for (std::size_t i = 0; i < options.warmup; ++i) work();

  BenchResult r;
  r.scheme = scheme;
  r.payload = payload.name;
  r.payload_bytes = payload.byte_count();
  r.trials = options.trials;
  r.samples.reserve(options.trials);
  for (std::size_t i = 0; i < options.trials; ++i) {
    const double start = clock();
    work();
    r.samples.push_back(clock() - start);
  }

  const double n = static_cast<double>(r.samples.size());
  double sum = 0.0;
  for (double s : r.samples) sum += s;
  r.mean_seconds = sum / n;
  double ss = 0.0;
  for (double s : r.samples) ss += (s - r.mean_seconds) * (s - r.mean_seconds);
  r.variance_seconds2 = ss / (n - 1.0);
  return r;
}

BenchResult bench_chaos(const Payload& payload, const CipherConfig& cfg,
                        const BenchOptions& options) {
  cfg.validate();
  std::size_t sink = 0;
  auto work = [&] {
    if (payload.kind == PayloadKind::Audio) {
      sink += encrypt_audio(payload.audio, cfg).body.size();
    } else {
      for (const auto& frame : payload.frames) sink += encrypt_image(frame, cfg).body.size();
    }
  };
  BenchResult r = time_trials(kChaosScheme, payload, work, options);
  if (sink == 0) raise(Errc::InvalidParameter, "payload is empty");
  return r;
}

BenchResult bench_aes_baseline(const Payload& payload, const BenchOptions& options) {
  static constexpr unsigned char kKey[16] = {0x2b, 0x7e, 0x15, 0x16, 0x28, 0xae, 0xd2, 0xa6,
                                             0xab, 0xf7, 0x15, 0x88, 0x09, 0xcf, 0x4f, 0x3c};
  static constexpr unsigned char kIv[16] = {0x00, 0x01, 0x02, 0x03, 0x04, 0x05, 0x06, 0x07,
                                            0x08, 0x09, 0x0a, 0x0b, 0x0c, 0x0d, 0x0e, 0x0f};
  std::unique_ptr<EVP_CIPHER_CTX, CipherCtxDeleter> ctx(EVP_CIPHER_CTX_new());
  const EVP_CIPHER* cipher = EVP_aes_128_cbc();
  if (!ctx || !cipher) raise(Errc::BaselineUnavailable, "AES-128-CBC is not available");

  const auto chunks = payload.chunks();
  std::vector<unsigned char> out;
  auto work = [&] {
    for (const auto& chunk : chunks) {
      out.resize(chunk.size() + 16);
      int len = 0, tail = 0;
      if (EVP_EncryptInit_ex(ctx.get(), cipher, nullptr, kKey, kIv) != 1 ||
          EVP_EncryptUpdate(ctx.get(), out.data(), &len, chunk.data(),
                            static_cast<int>(chunk.size())) != 1 ||
          EVP_EncryptFinal_ex(ctx.get(), out.data() + len, &tail) != 1)
        raise(Errc::BaselineUnavailable, "AES-128-CBC encryption failed");
    }
  };
  BenchResult r = time_trials(kAesScheme, payload, work, options);
  r.hardware_aes = aes_hardware_accelerated();
  return r;
}

bool aes_hardware_accelerated() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("aes");
#else
  return false;
#endif
}

bool pin_to_single_cpu() {
#ifdef __linux__
  const int cpu = sched_getcpu();
  if (cpu < 0) return false;
  cpu_set_t set;
  CPU_ZERO(&set);
  CPU_SET(cpu, &set);
  return sched_setaffinity(0, sizeof(set), &set) == 0;
#else
  return false;
#endif
}

const BenchResult* ComparisonTable::find(const std::string& scheme,
                                         const std::string& payload) const {
  for (const auto& r : results)
    if (r.scheme == scheme && r.payload == payload) return &r;
  return nullptr;
}

ComparisonTable compare_report(const std::vector<BenchResult>& results) {
  ComparisonTable t;
  t.results = results;
  for (const auto& r : results) {
    if (std::find(t.schemes.begin(), t.schemes.end(), r.scheme) == t.schemes.end())
      t.schemes.push_back(r.scheme);
    if (std::find(t.payloads.begin(), t.payloads.end(), r.payload) == t.payloads.end())
      t.payloads.push_back(r.payload);
  }
  return t;
}

std::string comparison_text(const ComparisonTable& t) {
  std::ostringstream os;
  os << std::left << std::setw(20) << "Method";
  for (const auto& p : t.payloads)
    os << std::setw(30) << (p + " mean (s)") << std::setw(30) << (p + " variance (s^2)");
  os << '\n';
  for (const auto& s : t.schemes) {
    os << std::setw(20) << s;
    for (const auto& p : t.payloads) {
      const BenchResult* r = t.find(s, p);
      std::ostringstream mean, var;
      if (r) {
        mean << std::scientific << std::setprecision(6) << r->mean_seconds;
        var << std::scientific << std::setprecision(6) << r->variance_seconds2;
      } else {
        mean << "-";
        var << "-";
      }
      os << std::setw(30) << mean.str() << std::setw(30) << var.str();
    }
    os << '\n';
  }
  return os.str();
}

std::string comparison_json(const ComparisonTable& t) {
  json results = json::array();
  for (const auto& r : t.results)
    results.push_back({{"scheme", r.scheme},
                       {"payload", r.payload},
                       {"payload_bytes", r.payload_bytes},
                       {"trials", r.trials},
                       {"mean_seconds", r.mean_seconds},
                       {"variance_seconds2", r.variance_seconds2},
                       {"hardware_aes", r.hardware_aes},
                       {"samples", r.samples}});
  json j = {{"schema", "chaocrypt.bench/1"},
            {"schemes", t.schemes},
            {"payloads", t.payloads},
            {"results", results}};
  return j.dump(2);
}

std::string comparison_csv(const ComparisonTable& t) {
  std::ostringstream os;
  os << "scheme,payload,payload_bytes,trials,mean_seconds,variance_seconds2,hardware_aes\n";
  os << std::setprecision(17);
  for (const auto& r : t.results)
    os << r.scheme << ',' << r.payload << ',' << r.payload_bytes << ',' << r.trials << ','
       << r.mean_seconds << ',' << r.variance_seconds2 << ',' << (r.hardware_aes ? 1 : 0) << '\n';
  return os.str();
}

ComparisonTable comparison_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    if (j.at("schema").get<std::string>() != "chaocrypt.bench/1")
      raise(Errc::InvalidParameter, "unknown bench schema");
    ComparisonTable t;
    t.schemes = j.at("schemes").get<std::vector<std::string>>();
    t.payloads = j.at("payloads").get<std::vector<std::string>>();
    for (const auto& e : j.at("results")) {
      BenchResult r;
      r.scheme = e.at("scheme").get<std::string>();
      r.payload = e.at("payload").get<std::string>();
      r.payload_bytes = e.at("payload_bytes").get<std::size_t>();
      r.trials = e.at("trials").get<std::size_t>();
      r.mean_seconds = e.at("mean_seconds").get<double>();
      r.variance_seconds2 = e.at("variance_seconds2").get<double>();
      r.hardware_aes = e.at("hardware_aes").get<bool>();
      r.samples = e.at("samples").get<std::vector<double>>();
      t.results.push_back(std::move(r));
    }
    return t;
  } catch (const json::exception& e) {
    raise(Errc::InvalidParameter, std::string("malformed bench JSON: ") + e.what());
  }
}

}  // namespace chaocrypt
