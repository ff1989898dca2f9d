#include "implycim/hexio.hpp"

#include <algorithm>
#include <cctype>

#include "implycim/errors.hpp"

namespace implycim {
namespace {

int nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  const char l = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (l >= 'a' && l <= 'f') return l - 'a' + 10;
  return -1;
}

std::size_t key_hex_length(cipher_id c) { return c == cipher_id::trivium ? 20 : 32; }
std::size_t iv_hex_length(cipher_id c) { return c == cipher_id::trivium ? 20 : 24; }

bits cipher_bits(cipher_id c, std::string_view hex, std::size_t expected, const char* what) {
  if (hex.size() != expected)
    throw input_error(std::string(to_string(c)) + " " + what + " must be " + std::to_string(expected) +
                      " hex characters");
  if (c == cipher_id::grain128a) return bits_from_hex(hex, bit_order::msb_first);
  bits b = bits_from_hex(hex, bit_order::lsb_first);
  std::reverse(b.begin(), b.end());
  return b;
}

}  // namespace

bits bits_from_bytes(std::span<const std::uint8_t> bytes, bit_order order) {
  bits out;
  out.reserve(bytes.size() * 8);
  for (auto v : bytes)
    for (int j = 0; j < 8; ++j) out.push_back((v >> (order == bit_order::lsb_first ? j : 7 - j)) & 1);
  return out;
}

std::vector<std::uint8_t> bytes_from_bits(std::span<const std::uint8_t> b, bit_order order) {
  std::vector<std::uint8_t> out((b.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    const int j = static_cast<int>(i % 8);
    if (b[i] & 1) out[i / 8] |= static_cast<std::uint8_t>(1u << (order == bit_order::lsb_first ? j : 7 - j));
  }
  return out;
}

std::vector<std::uint8_t> bytes_from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw input_error("hex string has odd length");
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int hi = nibble(hex[2 * i]), lo = nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw input_error("invalid hex character");
    out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  return out;
}

std::string hex_from_bytes(std::span<const std::uint8_t> bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto v : bytes) {
    out.push_back(digits[v >> 4]);
    out.push_back(digits[v & 15]);
  }
  return out;
}

bits bits_from_hex(std::string_view hex, bit_order order) { return bits_from_bytes(bytes_from_hex(hex), order); }

std::string hex_from_bits(std::span<const std::uint8_t> b, bit_order order) {
  return hex_from_bytes(bytes_from_bits(b, order));
}

bit_order keystream_order(cipher_id c) {
  return c == cipher_id::trivium ? bit_order::lsb_first : bit_order::msb_first;
}

bits key_from_hex(cipher_id c, std::string_view hex) { return cipher_bits(c, hex, key_hex_length(c), "key"); }

bits iv_from_hex(cipher_id c, std::string_view hex) { return cipher_bits(c, hex, iv_hex_length(c), "iv"); }

std::string keystream_hex(cipher_id c, std::span<const std::uint8_t> keystream) {
  return hex_from_bits(keystream, keystream_order(c));
}

}  // namespace implycim
