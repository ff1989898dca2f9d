#include "implycim/engine.hpp"

#include <ostream>
#include <string>

#include "implycim/errors.hpp"

namespace implycim {

array_state::array_state(std::size_t length) : bits_(length, 0) {
  if (length == 0) throw layout_error("array length must be positive");
}

std::uint8_t array_state::get(cell_id c) const {
  if (c.index >= bits_.size()) throw layout_error("cell " + std::to_string(c.index) + " out of range");
  return bits_[c.index];
}

void array_state::set(cell_id c, std::uint8_t bit) {
  if (c.index >= bits_.size()) throw layout_error("cell " + std::to_string(c.index) + " out of range");
  bits_[c.index] = bit ? 1 : 0;
}

exec_stats& exec_stats::operator+=(const exec_stats& other) {
  steps += other.steps;
  for (const auto& [k, n] : other.per_gate_counts) per_gate_counts[k] += n;
  return *this;
}

trace_sink::trace_sink(std::ostream& os, bool header) : os_(&os) {
  if (header) *os_ << "step_index,kind,p,q,resulting_bit\n";
}

void trace_sink::record(const micro_op& op, std::uint8_t resulting_bit) {
  *os_ << next_++ << ',';
  if (op.kind == op_kind::false_op)
    *os_ << "FALSE,,";
  else
    *os_ << "IMPLY," << op.p.index << ',';
  *os_ << op.q.index << ',' << int(resulting_bit) << '\n';
}

void validate(const micro_op& op, std::size_t length) {
  if (op.q.index >= length) throw layout_error("target cell " + std::to_string(op.q.index) + " out of range");
  if (op.kind == op_kind::imply) {
    if (op.p.index >= length) throw layout_error("source cell " + std::to_string(op.p.index) + " out of range");
    if (op.p == op.q) throw invalid_operand_error("IMPLY source and target are the same cell");
  }
}

void apply(array_state& state, const micro_op& op) {
  validate(op, state.size());
  run_unchecked(state.data(), std::span<const micro_op>(&op, 1));
}

void apply(array_state& state, const micro_op& op, exec_stats& stats, trace_sink* trace) {
  apply(state, op);
  ++stats.steps;
  if (trace) trace->record(op, state.data()[op.q.index]);
}

array_state exec_false(array_state state, cell_id target, exec_stats* stats) {
  exec_stats local;
  apply(state, micro_op::make_false(target), stats ? *stats : local);
  return state;
}

array_state exec_imply(array_state state, cell_id p, cell_id q, exec_stats* stats) {
  exec_stats local;
  apply(state, micro_op::make_imply(p, q), stats ? *stats : local);
  return state;
}

std::pair<array_state, exec_stats> run_program(const array_state& state, std::span<const micro_op> ops,
                                               trace_sink* trace) {
  array_state work = state;
  exec_stats stats;
  for (const auto& op : ops) apply(work, op, stats, trace);
  return {std::move(work), std::move(stats)};
}

}  // namespace implycim
