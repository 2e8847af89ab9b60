#include "chaocrypt/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cstring>
#include <string>

#include "chaocrypt/error.hpp"
#include "chaocrypt/formats.hpp"

namespace chaocrypt {

namespace {

bool starts_with(std::span<const std::uint8_t> bytes, std::string_view magic) {
  return bytes.size() >= magic.size() &&
         std::memcmp(bytes.data(), magic.data(), magic.size()) == 0;
}

struct PngImage {
  png_image img{};
  PngImage() { img.version = PNG_IMAGE_VERSION; }
  ~PngImage() { png_image_free(&img); }
  PngImage(const PngImage&) = delete;
  PngImage& operator=(const PngImage&) = delete;
};

}  // namespace

InputKind sniff(std::span<const std::uint8_t> bytes) {
  if (starts_with(bytes, "P5")) return InputKind::Pgm;
  if (starts_with(bytes, "\x89PNG\r\n\x1a\n")) return InputKind::Png;
  if (starts_with(bytes, "RIFF") && bytes.size() >= 12 &&
      std::memcmp(bytes.data() + 8, "WAVE", 4) == 0)
    return InputKind::Wav;
  if (starts_with(bytes, "CHE1")) return InputKind::Envelope;
  return InputKind::Unknown;
}

ImageBuffer decode_png(std::span<const std::uint8_t> bytes) {
  PngImage png;
  if (!png_image_begin_read_from_memory(&png.img, bytes.data(), bytes.size()))
    raise(Errc::MalformedImage, std::string("PNG: ") + png.img.message);
  const bool colour = (png.img.format & PNG_FORMAT_FLAG_COLOR) != 0;
  png.img.format = colour ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  const std::size_t w = png.img.width, h = png.img.height;
  std::vector<std::uint8_t> buf(PNG_IMAGE_SIZE(png.img));
  if (!png_image_finish_read(&png.img, nullptr, buf.data(), 0, nullptr))
    raise(Errc::MalformedImage, std::string("PNG: ") + png.img.message);
  if (w < 2 || h < 2) raise(Errc::MalformedImage, "image must be at least 2x2");
  if (colour) return to_grayscale(buf, w, h);
  return ImageBuffer(w, h, std::move(buf));
}

std::vector<std::uint8_t> encode_png(const ImageBuffer& img) {
  PngImage png;
  png.img.width = static_cast<png_uint_32>(img.width());
  png.img.height = static_cast<png_uint_32>(img.height());
  png.img.format = PNG_FORMAT_GRAY;
  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&png.img, nullptr, &size, 0, img.pixels().data(), 0, nullptr))
    raise(Errc::Io, std::string("PNG: ") + png.img.message);
  std::vector<std::uint8_t> out(size);
  if (!png_image_write_to_memory(&png.img, out.data(), &size, 0, img.pixels().data(), 0,
                                 nullptr))
    raise(Errc::Io, std::string("PNG: ") + png.img.message);
  out.resize(size);
  return out;
}

ImageBuffer decode_image(std::span<const std::uint8_t> bytes) {
  switch (sniff(bytes)) {
    case InputKind::Pgm:
      return decode_pgm(bytes);
    case InputKind::Png:
      return decode_png(bytes);
    default:
      raise(Errc::MalformedImage, "expected a binary PGM (P5) or PNG image");
  }
}

std::vector<std::uint8_t> encode_image_for(const std::filesystem::path& path,
                                           const ImageBuffer& img) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".png" ? encode_png(img) : encode_pgm(img);
}

}  // namespace chaocrypt
