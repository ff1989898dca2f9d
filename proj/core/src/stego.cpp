#include "implycim/stego.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "implycim/errors.hpp"

namespace implycim {
namespace {

void skip_space_and_comments(std::istream& is) {
  for (;;) {
    const int c = is.peek();
    if (c == '#') {
      std::string line;
      std::getline(is, line);
    } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      is.get();
    } else {
      return;
    }
  }
}

std::uint32_t read_header_number(std::istream& is) {
  skip_space_and_comments(is);
  std::uint64_t v = 0;
  int digits = 0;
  while (std::isdigit(is.peek())) {
    v = v * 10 + static_cast<std::uint64_t>(is.get() - '0');
    if (v > std::numeric_limits<std::uint32_t>::max()) throw format_error("PGM header value too large");
    ++digits;
  }
  if (digits == 0) throw format_error("malformed PGM header");
  return static_cast<std::uint32_t>(v);
}

}  // namespace

gray_image::gray_image(std::uint32_t w, std::uint32_t h, std::uint8_t fill)
    : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {
  if (w == 0 || h == 0) throw format_error("image dimensions must be positive");
}

gray_image read_pgm(std::istream& is) {
  char magic[2] = {0, 0};
  is.read(magic, 2);
  if (!is || magic[0] != 'P' || magic[1] != '5') throw format_error("not a binary PGM (P5) image");
  const auto w = read_header_number(is);
  const auto h = read_header_number(is);
  const auto maxval = read_header_number(is);
  if (maxval != 255) throw format_error("only maxval 255 PGM images are supported");
  const int sep = is.get();
  if (sep != ' ' && sep != '\t' && sep != '\n' && sep != '\r') throw format_error("malformed PGM header");
  gray_image img(w, h);
  is.read(reinterpret_cast<char*>(img.pixels.data()), static_cast<std::streamsize>(img.pixels.size()));
  if (static_cast<std::size_t>(is.gcount()) != img.pixels.size()) throw format_error("truncated PGM pixel data");
  return img;
}

gray_image read_pgm(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw format_error("cannot open " + path.string());
  return read_pgm(is);
}

void write_pgm(std::ostream& os, const gray_image& img) {
  os << "P5\n" << img.width << ' ' << img.height << "\n255\n";
  os.write(reinterpret_cast<const char*>(img.pixels.data()), static_cast<std::streamsize>(img.pixels.size()));
}

void write_pgm(const std::filesystem::path& path, const gray_image& img) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw format_error("cannot write " + path.string());
  write_pgm(os, img);
  if (!os) throw format_error("failed writing " + path.string());
}

std::size_t stego_capacity(const gray_image& img) {
  return img.size() > stego_header_bits ? img.size() - stego_header_bits : 0;
}

gray_image embed_lsb(const gray_image& cover, std::span<const std::uint8_t> payload) {
  if (cover.size() < stego_header_bits || payload.size() > stego_capacity(cover) ||
      payload.size() > std::numeric_limits<std::uint32_t>::max())
    throw capacity_error("payload of " + std::to_string(payload.size()) + " bits exceeds capacity of " +
                         std::to_string(stego_capacity(cover)));
  gray_image out = cover;
  const auto len = static_cast<std::uint32_t>(payload.size());
  std::size_t i = 0;
  for (int k = 31; k >= 0; --k, ++i) out.pixels[i] = static_cast<std::uint8_t>((out.pixels[i] & 0xFE) | ((len >> k) & 1));
  for (auto bit : payload) {
    out.pixels[i] = static_cast<std::uint8_t>((out.pixels[i] & 0xFE) | (bit & 1));
    ++i;
  }
  return out;
}

bits extract_lsb(const gray_image& img) {
  if (img.size() < stego_header_bits) throw corrupt_payload_error("image too small for a length header");
  std::uint32_t len = 0;
  for (std::size_t i = 0; i < stego_header_bits; ++i) len = (len << 1) | (img.pixels[i] & 1);
  if (len > stego_capacity(img))
    throw corrupt_payload_error("length header " + std::to_string(len) + " exceeds capacity");
  bits out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = img.pixels[stego_header_bits + i] & 1;
  return out;
}

double psnr(const gray_image& a, const gray_image& b) {
  if (a.width != b.width || a.height != b.height) throw input_error("image dimensions differ");
  double sse = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = static_cast<double>(a.pixels[i]) - static_cast<double>(b.pixels[i]);
    sse += d * d;
  }
  if (sse == 0.0) return std::numeric_limits<double>::infinity();
  const double mse = sse / static_cast<double>(a.size());
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

std::array<std::uint64_t, 256> histogram(const gray_image& img) {
  std::array<std::uint64_t, 256> h{};
  for (auto p : img.pixels) ++h[p];
  return h;
}

void write_histogram_csv(std::ostream& os, const std::array<std::uint64_t, 256>& hist) {
  os << "bin,count\n";
  for (std::size_t i = 0; i < hist.size(); ++i) os << i << ',' << hist[i] << '\n';
}

}  // namespace implycim
