#include <png.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "chaocrypt/cli.hpp"
#include "chaocrypt/formats.hpp"
#include "chaocrypt/image_io.hpp"
#include "chaocrypt/synthetic.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace chaocrypt;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli_run(std::vector<std::string> args) {
  args.insert(args.begin(), "chaocrypt");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::path(CHAOCRYPT_TEST_TMPDIR) / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& f) const { return (path / f).string(); }
  std::size_t entries() const {
    return static_cast<std::size_t>(std::distance(fs::directory_iterator(path), {}));
  }
};

}  // namespace

TEST_CASE("encrypt then decrypt restores the grayscale image") {
  TempDir dir("roundtrip");
  const ImageBuffer img = make_test_image(40, 30, 5);
  write_file_atomic(dir / "in.pgm", encode_pgm(img));
  write_file_atomic(dir / "in.png", encode_png(img));

  for (const std::string in : {"in.pgm", "in.png"}) {
    CAPTURE(in);
    REQUIRE(cli_run({"encrypt", "--in", dir / in, "--out", dir / "c.che", "--secret", "k"}).code == 0);
    REQUIRE(cli_run({"decrypt", "--in", dir / "c.che", "--out", dir / "back.pgm", "--secret", "k"})
                .code == 0);
    CHECK(read_file(dir / "back.pgm") == encode_pgm(img));

    REQUIRE(cli_run({"encrypt", "--in", dir / in, "--out", dir / "h.che"}).code == 0);
    REQUIRE(cli_run({"decrypt", "--in", dir / "h.che", "--out", dir / "back.png"}).code == 0);
    CHECK(decode_png(read_file(dir / "back.png")) == img);
  }
}


TEST_CASE("colour PNG input is converted to grayscale") {
  TempDir dir("colour");
  const std::vector<std::uint8_t> rgb{255, 0, 0, 0, 255, 0, 0, 0, 255, 255, 255, 255};
  png_image img{};
  img.version = PNG_IMAGE_VERSION;
  img.width = 2;
  img.height = 2;
  img.format = PNG_FORMAT_RGB;
  REQUIRE(png_image_write_to_file(&img, (dir / "c.png").c_str(), 0, rgb.data(), 0, nullptr));
  const ImageBuffer gray = decode_png(read_file(dir / "c.png"));
  CHECK(gray == ImageBuffer(2, 2, {76, 150, 29, 255}));

  REQUIRE(cli_run({"encrypt", "--in", dir / "c.png", "--out", dir / "c.che"}).code == 0);
  REQUIRE(cli_run({"decrypt", "--in", dir / "c.che", "--out", dir / "g.pgm"}).code == 0);
  CHECK(decode_pgm(read_file(dir / "g.pgm")) == gray);
}

TEST_CASE("audio round trip through WAV") {
  TempDir dir("audio");
  WavAudio wav;
  wav.sample_rate = 8000;
  wav.samples = make_sine_audio(777, 300.0, 8000.0);
  write_file_atomic(dir / "in.wav", encode_wav(wav));
  REQUIRE(cli_run({"encrypt", "--in", dir / "in.wav", "--out", dir / "a.che"}).code == 0);
  REQUIRE(cli_run({"decrypt", "--in", dir / "a.che", "--out", dir / "out.wav", "--rate", "8000"})
              .code == 0);
  CHECK(read_file(dir / "out.wav") == encode_wav(wav));
}

TEST_CASE("analyze reports every metric field") {
  TempDir dir("analyze");
  write_file_atomic(dir / "p.pgm", encode_pgm(make_test_image(64, 64, 2)));
  REQUIRE(cli_run({"encrypt", "--in", dir / "p.pgm", "--out", dir / "p.che"}).code == 0);
  const Result r = cli_run({"analyze", "--plain", dir / "p.pgm", "--cipher", dir / "p.che",
                            "--histogram", dir / "hist.txt"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const char* col : {"plain", "cipher"})
    for (const char* f : {"h_cc", "v_cc", "d_cc", "entropy", "contrast", "energy", "homogeneity"}) {
      CAPTURE(f);
      CHECK(j.contains(col));
      CHECK(r.out.find(std::string("\"") + f + "\"") != std::string::npos);
    }
  for (const char* f : {"npcr", "uaci", "key_sensitivity", "mse", "psnr"})
    CHECK(j.contains(f));
  CHECK(j["npcr"].get<double>() > 98.0);
  CHECK(fs::exists(dir / "hist.txt"));

  const Result secret = cli_run({"encrypt", "--in", dir / "p.pgm", "--out", dir / "s.che",
                                 "--secret", "x"});
  REQUIRE(secret.code == 0);
  CHECK(cli_run({"analyze", "--plain", dir / "p.pgm", "--cipher", dir / "s.che"}).code == 1);
  CHECK(cli_run({"analyze", "--plain", dir / "p.pgm", "--cipher", dir / "s.che", "--secret", "x",
                 "--format", "text"})
            .out.find("NPCR") != std::string::npos);
  const Result csv = cli_run({"analyze", "--plain", dir / "p.pgm", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 2);
}

TEST_CASE("sampling seed comes from --seed, then CHAOCRYPT_SEED") {
  TempDir dir("seed");
  write_file_atomic(dir / "p.pgm", encode_pgm(make_test_image(64, 64, 3)));
  const auto base = std::vector<std::string>{"analyze", "--plain", dir / "p.pgm"};
  auto with = [&](std::vector<std::string> extra) {
    auto a = base;
    a.insert(a.end(), extra.begin(), extra.end());
    return cli_run(a).out;
  };
  ::unsetenv("CHAOCRYPT_SEED");
  const std::string dflt = with({});
  CHECK(with({"--seed", "42"}) == dflt);
  ::setenv("CHAOCRYPT_SEED", "9", 1);
  const std::string env9 = with({});
  CHECK(env9 != dflt);
  CHECK(with({"--seed", "9"}) == env9);
  CHECK(with({"--seed", "42"}) == dflt);
  ::setenv("CHAOCRYPT_SEED", "nine", 1);
  CHECK(cli_run(base).code == 1);
  ::unsetenv("CHAOCRYPT_SEED");
}

TEST_CASE("validation errors exit 1 before touching files") {
  TempDir dir("validation");
  write_file_atomic(dir / "p.pgm", encode_pgm(make_test_image(8, 8, 1)));
  const Result r = cli_run({"encrypt", "--in", dir / "p.pgm", "--out", dir / "c.che", "--mu", "1.5"});
  CHECK(r.code == 1);
  CHECK(r.err.rfind("chaocrypt: error[invalid-parameter]:", 0) == 0);
  CHECK(r.err.find("mu") != std::string::npos);
  CHECK_FALSE(fs::exists(dir / "c.che"));

  CHECK(cli_run({"encrypt", "--in", dir / "p.pgm", "--out", dir / "c.che", "--secret", "a",
                 "--plaintext-hash"})
            .code == 1);
  CHECK(cli_run({"encrypt", "--in", dir / "p.pgm", "--out", dir / "c.che", "--beta-nca", "50"})
            .code == 1);
  CHECK(cli_run({"frobnicate"}).code == 1);
  CHECK(cli_run({}).code == 1);
  CHECK(cli_run({"bench", "--trials", "10"}).code == 1);
  CHECK(cli_run({"analyze", "--plain", dir / "p.pgm", "--format", "xml"}).code == 1);
  CHECK(dir.entries() == 1);
}

TEST_CASE("I/O and format errors exit 2 without partial output") {
  TempDir dir("io");
  const Result missing = cli_run({"encrypt", "--in", dir / "nope.pgm", "--out", dir / "c.che"});
  CHECK(missing.code == 2);
  CHECK(missing.err.rfind("chaocrypt: error[io]:", 0) == 0);

  write_file_atomic(dir / "junk.bin", std::vector<std::uint8_t>{'h', 'e', 'l', 'l', 'o'});
  CHECK(cli_run({"encrypt", "--in", dir / "junk.bin", "--out", dir / "c.che"}).code == 2);
  CHECK(cli_run({"decrypt", "--in", dir / "junk.bin", "--out", dir / "o.pgm"}).code == 2);

  write_file_atomic(dir / "p.pgm", encode_pgm(make_test_image(8, 8, 1)));
  REQUIRE(cli_run({"encrypt", "--in", dir / "p.pgm", "--out", dir / "c.che", "--secret", "s"})
              .code == 0);
  auto env = read_file(dir / "c.che");
  env.resize(env.size() - 3);
  write_file_atomic(dir / "short.che", env);
  CHECK(cli_run({"decrypt", "--in", dir / "short.che", "--out", dir / "o.pgm", "--secret", "s"})
            .code == 2);
  CHECK(cli_run({"decrypt", "--in", dir / "c.che", "--out", dir / "o.pgm"}).code == 1);
  CHECK_FALSE(fs::exists(dir / "o.pgm"));
  CHECK(cli_run({"encrypt", "--in", dir / "p.pgm", "--out", dir / "missing/c.che"}).code == 2);
}

TEST_CASE("re-runs are idempotent") {
  TempDir dir("idem");
  write_file_atomic(dir / "p.pgm", encode_pgm(make_test_image(32, 32, 4)));
  REQUIRE(cli_run({"encrypt", "--in", dir / "p.pgm", "--out", dir / "a.che"}).code == 0);
  const auto first = read_file(dir / "a.che");
  REQUIRE(cli_run({"encrypt", "--in", dir / "p.pgm", "--out", dir / "a.che"}).code == 0);
  CHECK(read_file(dir / "a.che") == first);
  const Result r1 = cli_run({"analyze", "--plain", dir / "p.pgm", "--cipher", dir / "a.che"});
  const Result r2 = cli_run({"analyze", "--plain", dir / "p.pgm", "--cipher", dir / "a.che"});
  CHECK(r1.code == r2.code);
  CHECK(r1.out == r2.out);
}

TEST_CASE("sbox-check and bench") {
  const Result s = cli_run({"sbox-check"});
  REQUIRE(s.code == 0);
  const auto j = nlohmann::json::parse(s.out);
  CHECK(j["bijective"] == true);
  CHECK(j["inverse_round_trip"] == true);
  CHECK(j["fixed_points"] == 0);

  const Result b = cli_run({"bench", "--size", "8", "--warmup", "0", "--payload", "image",
                            "--payload", "audio512", "--format", "json"});
  REQUIRE(b.code == 0);
  const auto bj = nlohmann::json::parse(b.out);
  CHECK(bj.dump().find("AES-128-CBC") != std::string::npos);
  CHECK(cli_run({"bench", "--scheme", "des"}).code == 1);
  CHECK(cli_run({"bench", "--payload", "video"}).code == 1);
}
