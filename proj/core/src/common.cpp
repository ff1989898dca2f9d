#include "implycim/common.hpp"

#include <string>

#include "implycim/errors.hpp"

namespace implycim {

std::string_view to_string(cipher_id c) { return c == cipher_id::trivium ? "trivium" : "grain128a"; }

cipher_id cipher_from_string(std::string_view name) {
  if (name == "trivium") return cipher_id::trivium;
  if (name == "grain128a" || name == "grain") return cipher_id::grain128a;
  throw input_error("unknown cipher: " + std::string(name));
}

}  // namespace implycim
