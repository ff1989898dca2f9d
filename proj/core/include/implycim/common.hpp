#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "implycim/engine.hpp"

namespace implycim {

using bits = std::vector<std::uint8_t>;

enum class cipher_id : std::uint8_t { trivium, grain128a };
enum class phase : std::uint8_t { init, keystream };

std::string_view to_string(cipher_id c);
cipher_id cipher_from_string(std::string_view name);

struct cycle_result {
  exec_stats stats;
  std::optional<std::uint8_t> bit;
};

}  // namespace implycim
