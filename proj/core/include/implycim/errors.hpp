#pragma once

#include <stdexcept>

namespace implycim {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct layout_error : error {
  using error::error;
};

struct invalid_operand_error : error {
  using error::error;
};

struct scheduling_error : error {
  using error::error;
};

struct accounting_error : error {
  using error::error;
};

struct input_error : error {
  using error::error;
};

struct capacity_error : error {
  using error::error;
};

struct corrupt_payload_error : error {
  using error::error;
};

struct format_error : error {
  using error::error;
};

}  // namespace implycim
