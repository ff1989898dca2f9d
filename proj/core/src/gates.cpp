#include "implycim/gates.hpp"

#include <algorithm>
#include <string>

#include "implycim/errors.hpp"

namespace implycim {
namespace {

micro_op f(cell_id q) { return micro_op::make_false(q); }
micro_op i(cell_id p, cell_id q) { return micro_op::make_imply(p, q); }

void require_distinct(std::vector<cell_id> cells, gate_kind kind) {
  std::sort(cells.begin(), cells.end());
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
    throw invalid_operand_error(std::string(to_string(kind)) + ": operand and work cells must be distinct");
}

macro_program build(gate_kind kind, std::vector<cell_id> inputs, std::vector<cell_id> works, cell_id output,
                    std::vector<cell_id> destructive) {
  macro_program m{kind, std::move(inputs), std::move(works), output, std::move(destructive), false};
  std::vector<cell_id> all = m.inputs;
  all.insert(all.end(), m.works.begin(), m.works.end());
  require_distinct(std::move(all), kind);
  return m;
}

}  // namespace

std::string_view to_string(gate_kind kind) {
  switch (kind) {
    case gate_kind::inverter: return "INVERTER";
    case gate_kind::buffer: return "BUFFER";
    case gate_kind::and2: return "AND2";
    case gate_kind::and3: return "AND3";
    case gate_kind::and4: return "AND4";
    case gate_kind::xor2_destructive: return "XOR2_DESTRUCTIVE";
    case gate_kind::xor2_nondestructive: return "XOR2_NONDESTRUCTIVE";
    case gate_kind::xor3: return "XOR3";
    case gate_kind::or2: return "OR2";
    case gate_kind::nor2: return "NOR2";
    case gate_kind::nand2: return "NAND2";
  }
  return "?";
}

gate_kind gate_kind_from_string(std::string_view name) {
  for (auto k : all_kinds())
    if (to_string(k) == name) return k;
  throw input_error("unknown gate kind: " + std::string(name));
}

const std::array<gate_kind, 8>& measured_kinds() {
  static const std::array<gate_kind, 8> kinds{gate_kind::inverter, gate_kind::buffer, gate_kind::and2,
                                              gate_kind::and3,     gate_kind::and4,   gate_kind::xor2_destructive,
                                              gate_kind::xor2_nondestructive, gate_kind::xor3};
  return kinds;
}

const std::array<gate_kind, 11>& all_kinds() {
  static const std::array<gate_kind, 11> kinds{
      gate_kind::inverter, gate_kind::buffer,           gate_kind::and2,
      gate_kind::and3,     gate_kind::and4,             gate_kind::xor2_destructive,
      gate_kind::xor2_nondestructive, gate_kind::xor3, gate_kind::or2,
      gate_kind::nor2,     gate_kind::nand2};
  return kinds;
}

unsigned arity(gate_kind kind) {
  switch (kind) {
    case gate_kind::inverter:
    case gate_kind::buffer: return 1;
    case gate_kind::and3:
    case gate_kind::xor3: return 3;
    case gate_kind::and4: return 4;
    default: return 2;
  }
}

gate_metrics_row gate_metrics(gate_kind kind) {
  switch (kind) {
    case gate_kind::inverter: return {2, 2, 0.1291};
    case gate_kind::buffer: return {4, 3, 0.269};
    case gate_kind::and2: return {5, 4, 0.3833};
    case gate_kind::and3: return {6, 5, 0.5025};
    case gate_kind::and4: return {11, 6, 0.9131};
    case gate_kind::xor2_destructive: return {9, 4, 0.7426};
    case gate_kind::xor2_nondestructive: return {11, 5, 0.9146};
    case gate_kind::xor3: return {20, 6, 1.711};
    case gate_kind::or2: return {3, 3, std::nullopt};
    case gate_kind::nor2: return {5, 3, std::nullopt};
    case gate_kind::nand2: return {3, 3, std::nullopt};
  }
  return {};
}

std::uint8_t evaluate(gate_kind kind, std::span<const std::uint8_t> in) {
  if (in.size() != arity(kind)) throw invalid_operand_error("wrong number of inputs for " + std::string(to_string(kind)));
  switch (kind) {
    case gate_kind::inverter: return !in[0];
    case gate_kind::buffer: return in[0] & 1;
    case gate_kind::and2: return in[0] & in[1] & 1;
    case gate_kind::and3: return in[0] & in[1] & in[2] & 1;
    case gate_kind::and4: return in[0] & in[1] & in[2] & in[3] & 1;
    case gate_kind::xor2_destructive:
    case gate_kind::xor2_nondestructive: return (in[0] ^ in[1]) & 1;
    case gate_kind::xor3: return (in[0] ^ in[1] ^ in[2]) & 1;
    case gate_kind::or2: return (in[0] | in[1]) & 1;
    case gate_kind::nor2: return !(in[0] | in[1]);
    case gate_kind::nand2: return !(in[0] & in[1]);
  }
  return 0;
}

macro_program make_inverter(cell_id src, cell_id dst) {
  return build(gate_kind::inverter, {src}, {dst}, dst, {dst});
}

macro_program make_buffer(cell_id src, cell_id dst, cell_id w) {
  return build(gate_kind::buffer, {src}, {dst, w}, dst, {dst, w});
}

macro_program make_and2(cell_id p, cell_id q, cell_id s1, cell_id s2) {
  return build(gate_kind::and2, {p, q}, {s1, s2}, s2, {s1, s2});
}

macro_program make_and3(cell_id a, cell_id b, cell_id c, cell_id s1, cell_id s2) {
  return build(gate_kind::and3, {a, b, c}, {s1, s2}, s2, {s1, s2});
}

macro_program make_and4(cell_id a, cell_id b, cell_id c, cell_id d, cell_id s1, cell_id s2) {
  return build(gate_kind::and4, {a, b, c, d}, {s1, s2}, s2, {s1, s2});
}

macro_program make_xor2d(cell_id a, cell_id b, cell_id s1, cell_id s2) {
  return build(gate_kind::xor2_destructive, {a, b}, {s1, s2}, s1, {b, s1, s2});
}

macro_program make_xor2d_complemented(cell_id a, cell_id b, cell_id s1, cell_id s2) {
  auto m = make_xor2d(a, b, s1, s2);
  m.complemented_a = true;
  return m;
}

macro_program make_xor2n(cell_id a, cell_id b, cell_id s1, cell_id s2, cell_id s3) {
  return build(gate_kind::xor2_nondestructive, {a, b}, {s1, s2, s3}, s1, {s1, s2, s3});
}

macro_program make_xor3(cell_id a, cell_id b, cell_id c, cell_id s1, cell_id s2, cell_id s3) {
  return build(gate_kind::xor3, {a, b, c}, {s1, s2, s3}, s2, {s1, s2, s3});
}

macro_program make_or2(cell_id p, cell_id q, cell_id s) {
  return build(gate_kind::or2, {p, q}, {s}, q, {q, s});
}

macro_program make_nor2(cell_id p, cell_id q, cell_id s) {
  return build(gate_kind::nor2, {p, q}, {s}, s, {q, s});
}

macro_program make_nand2(cell_id p, cell_id q, cell_id s) {
  return build(gate_kind::nand2, {p, q}, {s}, s, {s});
}

macro_program make_gate(gate_kind kind, std::span<const cell_id> c) {
  auto need = [&](std::size_t n) {
    if (c.size() != n)
      throw invalid_operand_error(std::string(to_string(kind)) + " expects " + std::to_string(n) + " cells");
  };
  switch (kind) {
    case gate_kind::inverter: need(2); return make_inverter(c[0], c[1]);
    case gate_kind::buffer: need(3); return make_buffer(c[0], c[1], c[2]);
    case gate_kind::and2: need(4); return make_and2(c[0], c[1], c[2], c[3]);
    case gate_kind::and3: need(5); return make_and3(c[0], c[1], c[2], c[3], c[4]);
    case gate_kind::and4: need(6); return make_and4(c[0], c[1], c[2], c[3], c[4], c[5]);
    case gate_kind::xor2_destructive: need(4); return make_xor2d(c[0], c[1], c[2], c[3]);
    case gate_kind::xor2_nondestructive: need(5); return make_xor2n(c[0], c[1], c[2], c[3], c[4]);
    case gate_kind::xor3: need(6); return make_xor3(c[0], c[1], c[2], c[3], c[4], c[5]);
    case gate_kind::or2: need(3); return make_or2(c[0], c[1], c[2]);
    case gate_kind::nor2: need(3); return make_nor2(c[0], c[1], c[2]);
    case gate_kind::nand2: need(3); return make_nand2(c[0], c[1], c[2]);
  }
  throw invalid_operand_error("unknown gate kind");
}

void expand_into(const macro_program& m, std::vector<micro_op>& out) {
  const auto& in = m.inputs;
  const auto& w = m.works;
  auto need = [&](std::size_t ni, std::size_t nw) {
    if (in.size() != ni || w.size() != nw)
      throw invalid_operand_error(std::string(to_string(m.kind)) + ": wrong operand count");
  };
  switch (m.kind) {
    case gate_kind::inverter:
      need(1, 1);
      out.insert(out.end(), {f(w[0]), i(in[0], w[0])});
      return;
    case gate_kind::buffer: {
      need(1, 2);
      const cell_id dst = w[0], tmp = w[1];
      out.insert(out.end(), {f(tmp), i(in[0], tmp), f(dst), i(tmp, dst)});
      return;
    }
    case gate_kind::and2:
      need(2, 2);
      out.insert(out.end(), {f(w[0]), f(w[1]), i(in[1], w[0]), i(in[0], w[0]), i(w[0], w[1])});
      return;
    case gate_kind::and3:
      need(3, 2);
      out.insert(out.end(), {f(w[0]), f(w[1]), i(in[0], w[0]), i(in[1], w[0]), i(in[2], w[0]), i(w[0], w[1])});
      return;
    case gate_kind::and4:
      need(4, 2);
      out.insert(out.end(), {f(w[0]), f(w[1]), i(in[0], w[0]), i(in[1], w[0]), i(in[2], w[0]), i(w[0], w[1]),
                             f(w[0]), i(in[3], w[0]), i(w[1], w[0]), f(w[1]), i(w[0], w[1])});
      return;
    case gate_kind::xor2_destructive: {
      need(2, 2);
      const cell_id a = in[0], b = in[1], s1 = w[0], s2 = w[1];
      if (m.complemented_a)
        out.insert(out.end(), {f(s2), i(a, s2), i(b, s2), f(s1), i(a, s1), i(s1, b), f(s1), i(b, s1), i(s2, s1)});
      else
        out.insert(out.end(), {f(s1), f(s2), i(a, s1), i(b, s2), i(s1, s2), f(s1), i(s2, s1), i(a, b), i(b, s1)});
      return;
    }
    case gate_kind::xor2_nondestructive: {
      need(2, 3);
      const cell_id a = in[0], b = in[1], s1 = w[0], s2 = w[1], s3 = w[2];
      out.insert(out.end(), {f(s1), f(s2), f(s3), i(a, s1), i(b, s2), i(s2, s3), i(s1, s2), i(a, s3), f(s1),
                             i(s2, s1), i(s3, s1)});
      return;
    }
    case gate_kind::xor3: {
      need(3, 3);
      expand_into(make_xor2n(in[0], in[1], w[0], w[1], w[2]), out);
      expand_into(make_xor2d(in[2], w[0], w[1], w[2]), out);
      return;
    }
    case gate_kind::or2:
      need(2, 1);
      out.insert(out.end(), {f(w[0]), i(in[0], w[0]), i(w[0], in[1])});
      return;
    case gate_kind::nor2:
      need(2, 1);
      out.insert(out.end(), {f(w[0]), i(in[0], w[0]), i(w[0], in[1]), f(w[0]), i(in[1], w[0])});
      return;
    case gate_kind::nand2:
      need(2, 1);
      out.insert(out.end(), {f(w[0]), i(in[1], w[0]), i(in[0], w[0])});
      return;
  }
}

std::vector<micro_op> expand(const macro_program& macro) {
  std::vector<micro_op> ops;
  ops.reserve(gate_metrics(macro.kind).steps);
  expand_into(macro, ops);
  return ops;
}

std::vector<cell_id> touched_cells(const macro_program& macro) {
  std::vector<cell_id> cells;
  for (const auto& op : expand(macro)) {
    cells.push_back(op.q);
    if (op.kind == op_kind::imply) cells.push_back(op.p);
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

void apply_macro(array_state& state, const macro_program& macro, exec_stats& stats, trace_sink* trace) {
  for (const auto& op : expand(macro)) apply(state, op, stats, trace);
  ++stats.per_gate_counts[macro.kind];
}

bool truth_check(gate_kind kind) {
  const unsigned n = arity(kind);
  const unsigned cell_count = gate_metrics(kind).memristors;
  std::vector<cell_id> cells;
  for (unsigned c = 0; c < cell_count; ++c) cells.push_back(cell_id{c});
  const macro_program m = make_gate(kind, cells);

  std::vector<cell_id> preserved;
  for (auto c : m.inputs)
    if (std::find(m.destructive_cells.begin(), m.destructive_cells.end(), c) == m.destructive_cells.end())
      preserved.push_back(c);

  for (unsigned v = 0; v < (1u << n); ++v) {
    std::vector<std::uint8_t> in(n);
    for (unsigned k = 0; k < n; ++k) in[k] = (v >> k) & 1;
    // Work cells start in both states to catch missing resets.
    for (std::uint8_t junk = 0; junk < 2; ++junk) {
      array_state s(cell_count);
      for (unsigned c = 0; c < cell_count; ++c) s.set(cell_id{c}, junk);
      for (unsigned k = 0; k < n; ++k) s.set(m.inputs[k], in[k]);
      const auto [out, stats] = run_program(s, expand(m));
      if (stats.steps != gate_metrics(kind).steps) return false;
      if (out.get(m.output) != evaluate(kind, in)) return false;
      for (auto c : preserved)
        if (out.get(c) != s.get(c)) return false;
    }
  }
  return true;
}

}  // namespace implycim
