#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <tuple>

#include "implycim/common.hpp"
#include "implycim/cost.hpp"
#include "implycim/engine.hpp"
#include "implycim/shift.hpp"

namespace implycim {

struct grain_layout {
  static constexpr unsigned reg_len = 128;
  static constexpr unsigned work_count = 6;
  static constexpr unsigned cell_count = 2 * reg_len + work_count + 1;
  static constexpr unsigned cells_without_output = cell_count - 1;
  static constexpr std::uint64_t init_cycles = 256;

  // 0-based register indices.
  static constexpr cell_id b(unsigned k) { return cell_id{k}; }
  static constexpr cell_id s(unsigned k) { return cell_id{reg_len + k}; }
  static constexpr cell_id w(unsigned k) { return cell_id{2 * reg_len + k}; }
  static constexpr cell_id y() { return cell_id{2 * reg_len + work_count}; }

  // Shift position p holds register index 128 - p.
  static constexpr unsigned position_of(unsigned index) { return reg_len - index; }

  static register_layout lfsr();
  static register_layout nfsr();
};

class grain_machine {
 public:
  explicit grain_machine(shift_mode mode);

  void load_key_iv(std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv);
  cycle_result step_cycle(trace_sink* trace = nullptr);

  shift_mode mode() const { return mode_; }
  std::uint64_t cycle() const { return cycle_; }
  phase current_phase() const { return cycle_ < grain_layout::init_cycles ? phase::init : phase::keystream; }
  const array_state& state() const { return state_; }
  const shift_plan& plan_lfsr() const { return plan_s_; }
  const shift_plan& plan_nfsr() const { return plan_b_; }

  // Logical b0..b127 followed by s0..s127.
  bits logical_state() const;
  bits polarity() const;

 private:
  struct compiled {
    std::vector<micro_op> ops;
    exec_stats stats;
  };
  const compiled& program_for(phase ph, std::uint64_t cycle, bool b96_complemented);

  shift_mode mode_;
  array_state state_;
  register_layout reg_s_, reg_b_;
  shift_plan plan_s_, plan_b_;
  bits pol_s_, pol_b_;
  std::uint64_t cycle_ = 0;
  std::map<std::tuple<int, std::size_t, std::size_t, bool>, compiled> cache_;
};

keystream_result grain_keystream(std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv,
                                 std::uint64_t n, shift_mode mode, trace_sink* trace = nullptr);

}  // namespace implycim
