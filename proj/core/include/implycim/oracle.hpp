#pragma once

#include <cstdint>
#include <span>

#include "implycim/common.hpp"

namespace implycim {

// Plain bit-level reference ciphers. Key/IV bit k is loaded into register index k
// (Trivium s(k+1) / s(94+k); Grain-128a b_k / s_k).
bits trivium_ref(std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv, std::uint64_t n);
bits grain128a_ref(std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv, std::uint64_t n);

bits xorcrypt(std::span<const std::uint8_t> message, std::span<const std::uint8_t> keystream);

}  // namespace implycim
