#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "implycim/common.hpp"

namespace implycim {

enum class bit_order : std::uint8_t { lsb_first, msb_first };

bits bits_from_bytes(std::span<const std::uint8_t> bytes, bit_order order);
// A trailing partial byte is zero-padded.
std::vector<std::uint8_t> bytes_from_bits(std::span<const std::uint8_t> b, bit_order order);

std::vector<std::uint8_t> bytes_from_hex(std::string_view hex);
std::string hex_from_bytes(std::span<const std::uint8_t> bytes);

bits bits_from_hex(std::string_view hex, bit_order order);
std::string hex_from_bits(std::span<const std::uint8_t> b, bit_order order);

// Cipher conventions. Trivium follows the eSTREAM reference: bits are taken LSB-first
// per byte and the 80-bit string is loaded last-bit-first. Grain-128a is MSB-first
// per byte in both directions.
bit_order keystream_order(cipher_id c);
bits key_from_hex(cipher_id c, std::string_view hex);
bits iv_from_hex(cipher_id c, std::string_view hex);
std::string keystream_hex(cipher_id c, std::span<const std::uint8_t> keystream);

}  // namespace implycim
