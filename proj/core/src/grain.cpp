#include "implycim/grain.hpp"

#include <array>
#include <string>

#include "implycim/errors.hpp"
#include "implycim/gates.hpp"
#include "program.hpp"

namespace implycim {
namespace {

using G = grain_layout;

constexpr std::array<unsigned, 14> lfsr_taps{0, 7, 8, 13, 20, 38, 42, 60, 70, 79, 81, 93, 94, 96};
constexpr std::array<unsigned, 36> nfsr_taps{0,  2,  3,  11, 12, 13, 15, 17, 18, 22, 24, 25,
                                             26, 27, 36, 40, 45, 48, 56, 59, 61, 64, 65, 67,
                                             68, 70, 73, 78, 82, 84, 88, 89, 91, 92, 93, 95};
constexpr unsigned tolerant_nfsr_tap = 96;

register_layout make_register(const std::string& name, cell_id (*cell)(unsigned), const char* prefix) {
  register_layout r;
  r.name = name;
  for (unsigned p = 1; p <= G::reg_len; ++p) {
    r.cells.push_back(cell(G::reg_len - p));
    r.cell_names.push_back(prefix + std::to_string(G::reg_len - p));
  }
  return r;
}

// NFSR feedback accumulator over four work cells; after each step the three non-accumulator cells are free.
class accumulator {
 public:
  accumulator(cell_id acc, std::array<cell_id, 3> free) : acc_(acc), free_(free) {}

  cell_id value() const { return acc_; }
  const std::array<cell_id, 3>& free() const { return free_; }

  void add_linear(cell_id x, bool complemented, std::vector<micro_op>& ops, exec_stats& st) {
    const auto m = complemented ? make_xor2d_complemented(x, acc_, free_[0], free_[1])
                                : make_xor2d(x, acc_, free_[0], free_[1]);
    detail::emit(m, ops, st);
    rotate(free_[0], free_[1], free_[2]);
  }

  void add_product(std::span<const unsigned> idx, std::vector<micro_op>& ops, exec_stats& st) {
    const cell_id scratch = free_[0], term = free_[1];
    switch (idx.size()) {
      case 2: detail::emit(make_and2(G::b(idx[0]), G::b(idx[1]), scratch, term), ops, st); break;
      case 3: detail::emit(make_and3(G::b(idx[0]), G::b(idx[1]), G::b(idx[2]), scratch, term), ops, st); break;
      case 4:
        detail::emit(make_and4(G::b(idx[0]), G::b(idx[1]), G::b(idx[2]), G::b(idx[3]), scratch, term), ops, st);
        break;
      default: throw invalid_operand_error("unsupported product width");
    }
    detail::emit(make_xor2d(term, acc_, free_[0], free_[2]), ops, st);
    rotate(free_[0], term, free_[2]);
  }

 private:
  void rotate(cell_id new_acc, cell_id keep1, cell_id keep2) {
    const cell_id old = acc_;
    acc_ = new_acc;
    free_ = {old, keep1, keep2};
  }

  cell_id acc_;
  std::array<cell_id, 3> free_;
};

struct logic_result {
  cell_id f;
  cell_id g;
};

logic_result emit_logic(phase ph, bool b96_complemented, std::vector<micro_op>& ops, exec_stats& st) {
  using detail::emit;
  const auto b = G::b;
  const auto s = G::s;
  const auto w = G::w;

  // h -> w0
  emit(make_and2(b(12), s(8), w(1), w(0)), ops, st);
  emit(make_and2(s(13), s(20), w(2), w(1)), ops, st);
  emit(make_xor2d(w(0), w(1), w(2), w(3)), ops, st);
  emit(make_and2(b(95), s(42), w(0), w(1)), ops, st);
  emit(make_xor2d(w(1), w(2), w(0), w(3)), ops, st);
  emit(make_and2(s(60), s(79), w(1), w(2)), ops, st);
  emit(make_xor2d(w(2), w(0), w(1), w(3)), ops, st);
  emit(make_and3(b(12), b(95), s(94), w(0), w(2)), ops, st);
  emit(make_xor2d(w(2), w(1), w(0), w(3)), ops, st);

  // linear b-terms of y -> w2
  emit(make_xor2n(b(2), b(15), w(1), w(2), w(3)), ops, st);
  cell_id acc = w(1), other = w(2);
  for (unsigned k : {36u, 45u, 64u, 73u, 89u}) {
    emit(make_xor2d(b(k), acc, other, w(3)), ops, st);
    std::swap(acc, other);
  }

  // y -> Y (keystream) or w0 (pre-init)
  emit(make_xor2d(s(93), w(0), w(1), w(3)), ops, st);
  const cell_id y_cell = ph == phase::keystream ? G::y() : w(0);
  emit(make_xor2d(w(2), w(1), y_cell, w(3)), ops, st);

  // f -> w1
  emit(make_xor2n(s(0), s(7), w(1), w(2), w(3)), ops, st);
  acc = w(1);
  other = w(2);
  for (unsigned k : {38u, 70u, 81u, 96u}) {
    emit(make_xor2d(s(k), acc, other, w(3)), ops, st);
    std::swap(acc, other);
  }
  const cell_id f = acc;

  // g over w2..w5
  emit(make_xor2n(s(0), b(0), w(2), w(3), w(4)), ops, st);
  accumulator g(w(2), {w(3), w(4), w(5)});
  for (unsigned k : {26u, 56u, 91u}) g.add_linear(b(k), false, ops, st);
  g.add_linear(b(tolerant_nfsr_tap), b96_complemented, ops, st);
  static constexpr std::array<std::array<unsigned, 2>, 7> and2_terms{
      {{3, 67}, {11, 13}, {17, 18}, {27, 59}, {40, 48}, {61, 65}, {68, 84}}};
  static constexpr std::array<std::array<unsigned, 3>, 2> and3_terms{{{22, 24, 25}, {70, 78, 82}}};
  static constexpr std::array<unsigned, 4> and4_term{88, 92, 93, 95};
  for (const auto& t : and2_terms) g.add_product(t, ops, st);
  for (const auto& t : and3_terms) g.add_product(t, ops, st);
  g.add_product(and4_term, ops, st);

  if (ph == phase::keystream) return {f, g.value()};

  const auto fr = g.free();
  emit(make_xor2d(w(0), f, fr[0], fr[1]), ops, st);
  emit(make_xor2d(w(0), g.value(), f, fr[1]), ops, st);
  return {fr[0], f};
}

bits logical(const array_state& st, cell_id (*cell)(unsigned), const bits& pol) {
  bits out(G::reg_len);
  for (unsigned k = 0; k < G::reg_len; ++k) out[k] = st.data()[cell(k).index] ^ pol[G::position_of(k) - 1];
  return out;
}

}  // namespace

register_layout grain_layout::lfsr() {
  auto r = make_register("lfsr", &G::s, "s");
  for (unsigned k : lfsr_taps) r.taps.insert(position_of(k));
  return r;
}

register_layout grain_layout::nfsr() {
  auto r = make_register("nfsr", &G::b, "b");
  for (unsigned k : nfsr_taps) r.taps.insert(position_of(k));
  r.tolerant_taps.insert(position_of(tolerant_nfsr_tap));
  return r;
}

grain_machine::grain_machine(shift_mode mode)
    : mode_(mode),
      state_(G::cell_count),
      reg_s_(G::lfsr()),
      reg_b_(G::nfsr()),
      plan_s_(make_plan(reg_s_, mode, 2 * G::reg_len)),
      plan_b_(make_plan(reg_b_, mode, 2 * G::reg_len)),
      pol_s_(G::reg_len, 0),
      pol_b_(G::reg_len, 0) {}

void grain_machine::load_key_iv(std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv) {
  if (key.size() != 128) throw input_error("grain128a key must be 128 bits");
  if (iv.size() != 96) throw input_error("grain128a iv must be 96 bits");
  state_ = array_state(G::cell_count);
  for (unsigned k = 0; k < 128; ++k) state_.set(G::b(k), key[k]);
  for (unsigned k = 0; k < 96; ++k) state_.set(G::s(k), iv[k]);
  for (unsigned k = 96; k < 127; ++k) state_.set(G::s(k), 1);
  std::fill(pol_s_.begin(), pol_s_.end(), 0);
  std::fill(pol_b_.begin(), pol_b_.end(), 0);
  cycle_ = 0;
}

const grain_machine::compiled& grain_machine::program_for(phase ph, std::uint64_t cycle, bool b96_complemented) {
  const auto key =
      std::make_tuple(static_cast<int>(ph), plan_s_.row_index(cycle), plan_b_.row_index(cycle), b96_complemented);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  compiled c;
  const auto fb = emit_logic(ph, b96_complemented, c.ops, c.stats);
  detail::emit_shift(reg_s_, plan_s_.row(cycle), fb.f, G::w(0), c.ops, c.stats);
  detail::emit_shift(reg_b_, plan_b_.row(cycle), fb.g, G::w(0), c.ops, c.stats);
  for (const auto& op : c.ops) validate(op, G::cell_count);
  return cache_.emplace(key, std::move(c)).first->second;
}

cycle_result grain_machine::step_cycle(trace_sink* trace) {
  const phase ph = current_phase();
  const std::uint64_t t = cycle_ + 1;
  for (unsigned pos : reg_s_.taps)
    if (pol_s_[pos - 1]) throw scheduling_error("lfsr tap read with complemented polarity");
  for (unsigned pos : reg_b_.taps)
    if (pol_b_[pos - 1]) throw scheduling_error("nfsr tap read with complemented polarity");
  const bool b96_complemented = pol_b_[G::position_of(tolerant_nfsr_tap) - 1] != 0;
  const compiled& prog = program_for(ph, t, b96_complemented);
  detail::execute(state_, prog.ops, trace);
  advance_polarity(pol_s_, plan_s_.row(t));
  advance_polarity(pol_b_, plan_b_.row(t));
  cycle_ = t;
  cycle_result r{prog.stats, std::nullopt};
  if (ph == phase::keystream) r.bit = state_.get(G::y());
  return r;
}

bits grain_machine::logical_state() const {
  bits out = logical(state_, &G::b, pol_b_);
  const bits s = logical(state_, &G::s, pol_s_);
  out.insert(out.end(), s.begin(), s.end());
  return out;
}

bits grain_machine::polarity() const {
  bits out(2 * G::reg_len);
  for (unsigned k = 0; k < G::reg_len; ++k) {
    out[k] = pol_b_[G::position_of(k) - 1];
    out[G::reg_len + k] = pol_s_[G::position_of(k) - 1];
  }
  return out;
}

keystream_result grain_keystream(std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv,
                                 std::uint64_t n, shift_mode mode, trace_sink* trace) {
  grain_machine m(mode);
  m.load_key_iv(key, iv);
  exec_stats init, ks;
  for (std::uint64_t t = 0; t < G::init_cycles; ++t) init += m.step_cycle(trace).stats;
  keystream_result out;
  out.keystream.reserve(n);
  for (std::uint64_t t = 0; t < n; ++t) {
    auto r = m.step_cycle(trace);
    ks += r.stats;
    out.keystream.push_back(*r.bit);
  }
  out.report = make_report(cipher_id::grain128a, mode, n, init, ks);
  return out;
}

}  // namespace implycim
