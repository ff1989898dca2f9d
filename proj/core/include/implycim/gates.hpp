#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "implycim/engine.hpp"

namespace implycim {

struct gate_metrics_row {
  unsigned steps = 0;
  unsigned memristors = 0;
  std::optional<double> energy_nj;  // absent for kinds without a measured row
};

struct macro_program {
  gate_kind kind = gate_kind::inverter;
  std::vector<cell_id> inputs;
  std::vector<cell_id> works;
  cell_id output;
  std::vector<cell_id> destructive_cells;
  // XOR2_DESTRUCTIVE only: input a is stored complemented; the XNOR form is used.
  bool complemented_a = false;
};

std::string_view to_string(gate_kind kind);
gate_kind gate_kind_from_string(std::string_view name);

unsigned arity(gate_kind kind);
gate_metrics_row gate_metrics(gate_kind kind);

// The eight kinds carrying a measured (steps, memristors, energy) row.
const std::array<gate_kind, 8>& measured_kinds();
const std::array<gate_kind, 11>& all_kinds();

// Boolean function each kind computes.
std::uint8_t evaluate(gate_kind kind, std::span<const std::uint8_t> inputs);

macro_program make_inverter(cell_id src, cell_id dst);
macro_program make_buffer(cell_id src, cell_id dst, cell_id w);
macro_program make_and2(cell_id p, cell_id q, cell_id s1, cell_id s2);
macro_program make_and3(cell_id a, cell_id b, cell_id c, cell_id s1, cell_id s2);
macro_program make_and4(cell_id a, cell_id b, cell_id c, cell_id d, cell_id s1, cell_id s2);
macro_program make_xor2d(cell_id a, cell_id b, cell_id s1, cell_id s2);
macro_program make_xor2d_complemented(cell_id a, cell_id b, cell_id s1, cell_id s2);
macro_program make_xor2n(cell_id a, cell_id b, cell_id s1, cell_id s2, cell_id s3);
macro_program make_xor3(cell_id a, cell_id b, cell_id c, cell_id s1, cell_id s2, cell_id s3);
macro_program make_or2(cell_id p, cell_id q, cell_id s);
macro_program make_nor2(cell_id p, cell_id q, cell_id s);
macro_program make_nand2(cell_id p, cell_id q, cell_id s);

// Generic constructor: cells are inputs followed by works in the order of the make_* functions.
macro_program make_gate(gate_kind kind, std::span<const cell_id> cells);

std::vector<micro_op> expand(const macro_program& macro);
void expand_into(const macro_program& macro, std::vector<micro_op>& out);

// Cells read or written by the expansion.
std::vector<cell_id> touched_cells(const macro_program& macro);

void apply_macro(array_state& state, const macro_program& macro, exec_stats& stats, trace_sink* trace = nullptr);

bool truth_check(gate_kind kind);

}  // namespace implycim
