#include "implycim/trivium.hpp"

#include <string>

#include "implycim/errors.hpp"
#include "implycim/gates.hpp"
#include "program.hpp"

namespace implycim {
namespace {

using L = trivium_layout;

register_layout make_register(const std::string& name, unsigned length, cell_id (*cell)(unsigned),
                              std::set<unsigned> taps) {
  register_layout r;
  r.name = name;
  for (unsigned k = 1; k <= length; ++k) {
    r.cells.push_back(cell(k));
    r.cell_names.push_back(name + std::to_string(k));
  }
  r.taps = std::move(taps);
  return r;
}

void emit_logic(phase ph, std::vector<micro_op>& ops, exec_stats& st) {
  using detail::emit;
  const auto s = L::s;
  // t1 -> s0, t1 + A91 A92 -> s2
  emit(make_xor2d(L::a(66), L::a(93), s(0), s(1)), ops, st);
  emit(make_and2(L::a(91), L::a(92), L::a(93), s(1)), ops, st);
  emit(make_xor2d(s(0), s(1), s(2), L::a(93)), ops, st);
  // t2 -> A93, t2 + B82 B83 -> s3
  emit(make_xor2d(L::b(69), L::b(84), L::a(93), s(1)), ops, st);
  emit(make_and2(L::b(82), L::b(83), L::b(84), s(1)), ops, st);
  emit(make_xor2d(L::a(93), s(1), s(3), L::b(84)), ops, st);
  // t3 -> B84, t3 + C109 C110 -> s4
  emit(make_xor2d(L::c(66), L::c(111), L::b(84), s(1)), ops, st);
  emit(make_and2(L::c(109), L::c(110), L::c(111), s(1)), ops, st);
  emit(make_xor2d(L::b(84), s(1), s(4), L::c(111)), ops, st);
  // register inputs: A <- s1, B <- C111, C <- s2
  emit(make_xor2d(L::a(69), s(4), s(1), L::c(111)), ops, st);
  emit(make_xor2d(L::b(78), s(2), L::c(111), s(4)), ops, st);
  emit(make_xor2d(L::c(87), s(3), s(2), s(4)), ops, st);
  if (ph == phase::keystream) {
    emit(make_xor2d(s(0), L::a(93), s(3), s(4)), ops, st);
    emit(make_xor2d(L::b(84), s(3), L::out(), s(4)), ops, st);
  }
}

bits logical(const array_state& st, const register_layout& r, const bits& pol) {
  bits out(r.length());
  for (unsigned k = 0; k < r.length(); ++k) out[k] = st.data()[r.cells[k].index] ^ pol[k];
  return out;
}

}  // namespace

register_layout trivium_layout::reg_a() { return make_register("A", a_len, &L::a, {66, 69, 91, 92, 93}); }
register_layout trivium_layout::reg_b() { return make_register("B", b_len, &L::b, {69, 78, 82, 83, 84}); }
register_layout trivium_layout::reg_c() { return make_register("C", c_len, &L::c, {66, 87, 109, 110, 111}); }

trivium_machine::trivium_machine(shift_mode mode)
    : mode_(mode),
      state_(L::cell_count),
      reg_a_(L::reg_a()),
      reg_b_(L::reg_b()),
      reg_c_(L::reg_c()),
      plan_a_(make_plan(reg_a_, mode, 2 * L::a_len)),
      plan_b_(make_plan(reg_b_, mode, 2 * L::b_len)),
      plan_c_(make_plan(reg_c_, mode, 2 * L::c_len)),
      pol_a_(L::a_len, 0),
      pol_b_(L::b_len, 0),
      pol_c_(L::c_len, 0) {}

void trivium_machine::load_key_iv(std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv) {
  if (key.size() != 80) throw input_error("trivium key must be 80 bits");
  if (iv.size() != 80) throw input_error("trivium iv must be 80 bits");
  state_ = array_state(L::cell_count);
  for (unsigned k = 0; k < 80; ++k) {
    state_.set(L::a(k + 1), key[k]);
    state_.set(L::b(k + 1), iv[k]);
  }
  for (unsigned k = 109; k <= 111; ++k) state_.set(L::c(k), 1);
  std::fill(pol_a_.begin(), pol_a_.end(), 0);
  std::fill(pol_b_.begin(), pol_b_.end(), 0);
  std::fill(pol_c_.begin(), pol_c_.end(), 0);
  cycle_ = 0;
}

const trivium_machine::compiled& trivium_machine::program_for(phase ph, std::uint64_t cycle) {
  const auto key = std::make_tuple(static_cast<int>(ph), plan_a_.row_index(cycle), plan_b_.row_index(cycle),
                                   plan_c_.row_index(cycle));
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  compiled c;
  emit_logic(ph, c.ops, c.stats);
  detail::emit_shift(reg_a_, plan_a_.row(cycle), L::s(1), L::s(3), c.ops, c.stats);
  detail::emit_shift(reg_b_, plan_b_.row(cycle), L::c(111), L::s(3), c.ops, c.stats);
  detail::emit_shift(reg_c_, plan_c_.row(cycle), L::s(2), L::s(3), c.ops, c.stats);
  for (const auto& op : c.ops) validate(op, L::cell_count);
  return cache_.emplace(key, std::move(c)).first->second;
}

cycle_result trivium_machine::step_cycle(trace_sink* trace) {
  const phase ph = current_phase();
  const std::uint64_t t = cycle_ + 1;
  const compiled& prog = program_for(ph, t);
  detail::execute(state_, prog.ops, trace);
  advance_polarity(pol_a_, plan_a_.row(t));
  advance_polarity(pol_b_, plan_b_.row(t));
  advance_polarity(pol_c_, plan_c_.row(t));
  cycle_ = t;
  cycle_result r{prog.stats, std::nullopt};
  if (ph == phase::keystream) r.bit = state_.get(L::out());
  return r;
}

bits trivium_machine::logical_state() const {
  bits out = logical(state_, reg_a_, pol_a_);
  const bits b = logical(state_, reg_b_, pol_b_);
  const bits c = logical(state_, reg_c_, pol_c_);
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

bits trivium_machine::polarity() const {
  bits out = pol_a_;
  out.insert(out.end(), pol_b_.begin(), pol_b_.end());
  out.insert(out.end(), pol_c_.begin(), pol_c_.end());
  return out;
}

keystream_result trivium_keystream(std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv,
                                   std::uint64_t n, shift_mode mode, trace_sink* trace) {
  trivium_machine m(mode);
  m.load_key_iv(key, iv);
  exec_stats init, ks;
  for (std::uint64_t t = 0; t < L::init_cycles; ++t) init += m.step_cycle(trace).stats;
  keystream_result out;
  out.keystream.reserve(n);
  for (std::uint64_t t = 0; t < n; ++t) {
    auto r = m.step_cycle(trace);
    ks += r.stats;
    out.keystream.push_back(*r.bit);
  }
  out.report = make_report(cipher_id::trivium, mode, n, init, ks);
  return out;
}

}  // namespace implycim
