#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace implycim {

enum class gate_kind : std::uint8_t {
  inverter,
  buffer,
  and2,
  and3,
  and4,
  xor2_destructive,
  xor2_nondestructive,
  xor3,
  or2,
  nor2,
  nand2,
};

struct cell_id {
  std::uint32_t index = 0;

  constexpr cell_id() = default;
  constexpr explicit cell_id(std::uint32_t i) : index(i) {}

  friend constexpr auto operator<=>(cell_id, cell_id) = default;
};

class array_state {
 public:
  explicit array_state(std::size_t length);

  std::size_t size() const { return bits_.size(); }
  std::uint8_t get(cell_id c) const;
  void set(cell_id c, std::uint8_t bit);

  std::uint8_t* data() { return bits_.data(); }
  const std::uint8_t* data() const { return bits_.data(); }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  friend bool operator==(const array_state&, const array_state&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

enum class op_kind : std::uint8_t { false_op, imply };

struct micro_op {
  op_kind kind = op_kind::false_op;
  cell_id p;  // unused for FALSE
  cell_id q;

  static constexpr micro_op make_false(cell_id target) { return {op_kind::false_op, cell_id{}, target}; }
  static constexpr micro_op make_imply(cell_id p, cell_id q) { return {op_kind::imply, p, q}; }

  friend bool operator==(const micro_op&, const micro_op&) = default;
};

struct exec_stats {
  std::uint64_t steps = 0;
  std::map<gate_kind, std::uint64_t> per_gate_counts;

  exec_stats& operator+=(const exec_stats& other);
  friend bool operator==(const exec_stats&, const exec_stats&) = default;
};

// CSV trace: step_index,kind,p,q,resulting_bit
class trace_sink {
 public:
  explicit trace_sink(std::ostream& os, bool header = true);
  void record(const micro_op& op, std::uint8_t resulting_bit);
  std::uint64_t lines() const { return next_; }

 private:
  std::ostream* os_;
  std::uint64_t next_ = 0;
};

void validate(const micro_op& op, std::size_t length);

// In-place primitives. Both validate their operands.
void apply(array_state& state, const micro_op& op);
void apply(array_state& state, const micro_op& op, exec_stats& stats, trace_sink* trace = nullptr);

array_state exec_false(array_state state, cell_id target, exec_stats* stats = nullptr);
array_state exec_imply(array_state state, cell_id p, cell_id q, exec_stats* stats = nullptr);

std::pair<array_state, exec_stats> run_program(const array_state& state, std::span<const micro_op> ops,
                                               trace_sink* trace = nullptr);

// Executes pre-validated ops with no bounds checks.
inline void run_unchecked(std::uint8_t* cells, std::span<const micro_op> ops) {
  for (const auto& op : ops) {
    if (op.kind == op_kind::false_op)
      cells[op.q.index] = 0;
    else
      cells[op.q.index] = static_cast<std::uint8_t>((cells[op.p.index] ^ 1) | cells[op.q.index]);
  }
}

}  // namespace implycim
