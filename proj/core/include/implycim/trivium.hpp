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

struct trivium_layout {
  static constexpr unsigned a_len = 93;
  static constexpr unsigned b_len = 84;
  static constexpr unsigned c_len = 111;
  static constexpr unsigned work_count = 5;
  static constexpr unsigned cell_count = a_len + b_len + c_len + work_count + 1;
  static constexpr unsigned quoted_memristors = 293;
  static constexpr std::uint64_t init_cycles = 1152;

  // 1-based register indices.
  static constexpr cell_id a(unsigned k) { return cell_id{k - 1}; }
  static constexpr cell_id b(unsigned k) { return cell_id{a_len + k - 1}; }
  static constexpr cell_id c(unsigned k) { return cell_id{a_len + b_len + k - 1}; }
  static constexpr cell_id s(unsigned k) { return cell_id{a_len + b_len + c_len + k}; }
  static constexpr cell_id out() { return cell_id{a_len + b_len + c_len + work_count}; }

  static register_layout reg_a();
  static register_layout reg_b();
  static register_layout reg_c();
};

class trivium_machine {
 public:
  explicit trivium_machine(shift_mode mode);

  void load_key_iv(std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv);
  cycle_result step_cycle(trace_sink* trace = nullptr);

  shift_mode mode() const { return mode_; }
  std::uint64_t cycle() const { return cycle_; }
  phase current_phase() const { return cycle_ < trivium_layout::init_cycles ? phase::init : phase::keystream; }
  const array_state& state() const { return state_; }
  const shift_plan& plan_a() const { return plan_a_; }
  const shift_plan& plan_b() const { return plan_b_; }
  const shift_plan& plan_c() const { return plan_c_; }

  // Logical register contents s1..s288 (stored bit XOR polarity).
  bits logical_state() const;
  // Polarity of s1..s288.
  bits polarity() const;

 private:
  struct compiled {
    std::vector<micro_op> ops;
    exec_stats stats;
  };
  const compiled& program_for(phase ph, std::uint64_t cycle);

  shift_mode mode_;
  array_state state_;
  register_layout reg_a_, reg_b_, reg_c_;
  shift_plan plan_a_, plan_b_, plan_c_;
  bits pol_a_, pol_b_, pol_c_;
  std::uint64_t cycle_ = 0;
  std::map<std::tuple<int, std::size_t, std::size_t, std::size_t>, compiled> cache_;
};

keystream_result trivium_keystream(std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv,
                                   std::uint64_t n, shift_mode mode, trace_sink* trace = nullptr);

}  // namespace implycim
