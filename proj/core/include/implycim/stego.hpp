#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "implycim/common.hpp"

namespace implycim {

struct gray_image {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<std::uint8_t> pixels;  // row-major

  gray_image() = default;
  gray_image(std::uint32_t w, std::uint32_t h, std::uint8_t fill = 0);

  std::size_t size() const { return pixels.size(); }
  friend bool operator==(const gray_image&, const gray_image&) = default;
};

// Binary PGM (P5), maxval 255.
gray_image read_pgm(std::istream& is);
gray_image read_pgm(const std::filesystem::path& path);
void write_pgm(std::ostream& os, const gray_image& img);
void write_pgm(const std::filesystem::path& path, const gray_image& img);

constexpr std::size_t stego_header_bits = 32;

// Payload bits available after the 32-bit big-endian length header.
std::size_t stego_capacity(const gray_image& img);

gray_image embed_lsb(const gray_image& cover, std::span<const std::uint8_t> payload);
bits extract_lsb(const gray_image& img);

// Decibels; +infinity for identical images.
double psnr(const gray_image& a, const gray_image& b);

std::array<std::uint64_t, 256> histogram(const gray_image& img);
// bin,count
void write_histogram_csv(std::ostream& os, const std::array<std::uint64_t, 256>& hist);

}  // namespace implycim
