#include "chaocrypt/formats.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <string_view>
#include <system_error>

#include "chaocrypt/error.hpp"

namespace chaocrypt {

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::Io, "cannot open '" + path.string() + "' for reading");
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  if (in.bad()) raise(Errc::Io, "read error on '" + path.string() + "'");
  return data;
}

void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::random_device rd;
  auto tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) raise(Errc::Io, "cannot open '" + tmp.string() + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      raise(Errc::Io, "write error on '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    raise(Errc::Io, "cannot move output into place at '" + path.string() + "': " + ec.message());
  }
}

namespace {

class PnmTokenizer {
 public:
  explicit PnmTokenizer(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::string token() {
    skip_space_and_comments();
    std::string tok;
    while (pos_ < bytes_.size() && !std::isspace(bytes_[pos_])) tok.push_back(char(bytes_[pos_++]));
    if (tok.empty()) raise(Errc::MalformedImage, "PGM header is truncated");
    return tok;
  }

  std::size_t number() {
    const std::string tok = token();
    std::size_t v = 0;
    for (char c : tok) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        raise(Errc::MalformedImage, "bad number '" + tok + "' in PGM header");
      v = v * 10 + static_cast<std::size_t>(c - '0');
      if (v > (std::size_t{1} << 31)) raise(Errc::MalformedImage, "PGM dimension too large");
    }
    return v;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  std::size_t raster_offset() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_]))
      raise(Errc::MalformedImage, "PGM header is not terminated by whitespace");
    return pos_ + 1;
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

std::uint32_t le32(std::span<const std::uint8_t> b, std::size_t at) {
  return std::uint32_t{b[at]} | std::uint32_t{b[at + 1]} << 8 | std::uint32_t{b[at + 2]} << 16 |
         std::uint32_t{b[at + 3]} << 24;
}

std::uint16_t le16(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint16_t>(b[at] | b[at + 1] << 8);
}

void put32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_tag(std::vector<std::uint8_t>& out, std::string_view tag) {
  out.insert(out.end(), tag.begin(), tag.end());
}

bool tag_is(std::span<const std::uint8_t> b, std::size_t at, std::string_view tag) {
  return std::equal(tag.begin(), tag.end(), b.begin() + static_cast<std::ptrdiff_t>(at));
}

}  // namespace

ImageBuffer decode_pgm(std::span<const std::uint8_t> bytes) {
  PnmTokenizer tz(bytes);
  if (tz.token() != "P5") raise(Errc::MalformedImage, "not a binary PGM (expected P5)");
  const std::size_t width = tz.number();
  const std::size_t height = tz.number();
  const std::size_t maxval = tz.number();
  if (maxval == 0 || maxval > 255)
    raise(Errc::MalformedImage, "only 8-bit PGM is supported, maxval " + std::to_string(maxval));
  const std::size_t offset = tz.raster_offset();
  if (bytes.size() < offset + width * height)
    raise(Errc::MalformedImage, "PGM raster is truncated");
  auto raster = bytes.subspan(offset, width * height);
  return ImageBuffer(width, height, std::vector<std::uint8_t>(raster.begin(), raster.end()));
}

std::vector<std::uint8_t> encode_pgm(const ImageBuffer& img) {
  const std::string header =
      "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.pixels().begin(), img.pixels().end());
  return out;
}

WavAudio decode_wav(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12 || !tag_is(bytes, 0, "RIFF") || !tag_is(bytes, 8, "WAVE"))
    raise(Errc::MalformedAudio, "not a RIFF/WAVE file");

  WavAudio audio;
  bool have_fmt = false;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::uint32_t size = le32(bytes, pos + 4);
    const std::size_t body = pos + 8;
    if (body + size > bytes.size()) raise(Errc::MalformedAudio, "WAV chunk runs past end of file");
    if (tag_is(bytes, pos, "fmt ")) {
      if (size < 16) raise(Errc::MalformedAudio, "WAV fmt chunk is too short");
      const auto format = le16(bytes, body);
      const auto channels = le16(bytes, body + 2);
      audio.sample_rate = le32(bytes, body + 4);
      const auto bits = le16(bytes, body + 14);
      if (format != 1 || channels != 1 || bits != 16)
        raise(Errc::MalformedAudio, "only mono 16-bit PCM WAV is supported");
      have_fmt = true;
    } else if (tag_is(bytes, pos, "data")) {
      if (!have_fmt) raise(Errc::MalformedAudio, "WAV data chunk precedes fmt chunk");
      audio.samples.resize(size / 2);
      for (std::size_t i = 0; i < audio.samples.size(); ++i)
        audio.samples[i] = static_cast<std::int16_t>(le16(bytes, body + 2 * i));
      return audio;
    }
    pos = body + size + (size & 1);
  }
  raise(Errc::MalformedAudio, "WAV file has no data chunk");
}

std::vector<std::uint8_t> encode_wav(const WavAudio& audio) {
  const auto data_size = static_cast<std::uint32_t>(audio.samples.size() * 2);
  std::vector<std::uint8_t> out;
  out.reserve(44 + data_size);
  put_tag(out, "RIFF");
  put32(out, 36 + data_size);
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put32(out, 16);
  put16(out, 1);  // PCM
  put16(out, 1);  // mono
  put32(out, audio.sample_rate);
  put32(out, audio.sample_rate * 2);
  put16(out, 2);
  put16(out, 16);
  put_tag(out, "data");
  put32(out, data_size);
  for (auto s : audio.samples) put16(out, static_cast<std::uint16_t>(s));
  return out;
}

}  // namespace chaocrypt
