#pragma once

#include <span>
#include <vector>

#include "implycim/gates.hpp"
#include "implycim/shift.hpp"

namespace implycim::detail {

inline void emit(const macro_program& m, std::vector<micro_op>& ops, exec_stats& stats) {
  const auto before = ops.size();
  expand_into(m, ops);
  stats.steps += ops.size() - before;
  ++stats.per_gate_counts[m.kind];
}

// Transfers run from the far end toward the injection so each source is read before it is overwritten.
inline void emit_shift(const register_layout& reg, std::span<const element> row, cell_id injection, cell_id work,
                       std::vector<micro_op>& ops, exec_stats& stats) {
  for (unsigned j = reg.length(); j >= 1; --j) {
    const cell_id src = j == 1 ? injection : reg.cells[j - 2];
    const cell_id dst = reg.cells[j - 1];
    emit(row[j - 1] == element::buffer ? make_buffer(src, dst, work) : make_inverter(src, dst), ops, stats);
  }
}

inline void execute(array_state& state, std::span<const micro_op> ops, trace_sink* trace) {
  if (!trace) {
    run_unchecked(state.data(), ops);
    return;
  }
  for (const auto& op : ops) {
    run_unchecked(state.data(), std::span<const micro_op>(&op, 1));
    trace->record(op, state.data()[op.q.index]);
  }
}

}  // namespace implycim::detail
